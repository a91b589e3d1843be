if (fAdapter41 == null)
    return;
fAdapter41.reload();
