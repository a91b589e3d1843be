if (fManager239 == null)
    return;
fManager239.refresh();
