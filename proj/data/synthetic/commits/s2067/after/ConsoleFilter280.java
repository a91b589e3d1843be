if (fRegistry279 == null)
    return;
fRegistry279.reload();
