if (fInput212 == null)
    return;
fInput212.refresh();
