if (fInput98 == null)
    return;
fInput98.refresh();
