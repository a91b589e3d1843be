if (fAdapter150 == null)
    return;
fAdapter150.dispose();
