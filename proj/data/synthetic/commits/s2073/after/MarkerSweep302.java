if (fManager301 == null)
    return;
fManager301.reload();
