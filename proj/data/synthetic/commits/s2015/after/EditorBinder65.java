if (fStore64 == null)
    return;
fStore64.refresh();
