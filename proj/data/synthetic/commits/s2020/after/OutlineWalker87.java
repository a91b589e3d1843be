if (fStore86 == null)
    return;
fStore86.refresh();
