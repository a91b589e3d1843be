if (fModel147 == null)
    return;
fModel147.dispose();
