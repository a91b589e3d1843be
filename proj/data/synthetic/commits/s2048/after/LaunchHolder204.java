if (fRegistry203 == null)
    return;
fRegistry203.reload();
