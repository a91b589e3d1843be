if (fTable77 == null)
    return;
fTable77.reload();
