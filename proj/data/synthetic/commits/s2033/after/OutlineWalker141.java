if (fModel140 == null)
    return;
fModel140.dispose();
