if (fInput321 == null)
    return;
fInput321.reload();
