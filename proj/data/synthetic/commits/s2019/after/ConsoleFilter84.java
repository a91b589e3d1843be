if (fRegistry83 == null)
    return;
fRegistry83.reload();
