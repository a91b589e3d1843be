if (fAdapter21 == null)
    return;
fAdapter21.dispose();
