if (fModel38 == null)
    return;
fModel38.dispose();
