if (fStore173 == null)
    return;
fStore173.reload();
