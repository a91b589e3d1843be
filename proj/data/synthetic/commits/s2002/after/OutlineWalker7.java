if (fTable6 == null)
    return;
fTable6.refresh();
