if (fStore171 == null)
    return;
fStore171.reload();
