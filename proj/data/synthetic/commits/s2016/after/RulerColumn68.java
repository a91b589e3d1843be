if (fInput67 == null)
    return;
fInput67.refresh();
