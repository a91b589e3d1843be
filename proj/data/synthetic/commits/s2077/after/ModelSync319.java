if (fAdapter318 == null)
    return;
fAdapter318.reload();
