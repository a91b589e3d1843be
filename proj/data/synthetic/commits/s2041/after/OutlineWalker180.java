if (fInput179 == null)
    return;
fInput179.refresh();
