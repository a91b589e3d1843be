if (fTable115 == null)
    return;
fTable115.refresh();
