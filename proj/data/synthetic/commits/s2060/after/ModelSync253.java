if (fTree252 == null)
    return;
fTree252.refresh();
