if (fCache314 == null)
    return;
fCache314.reload();
