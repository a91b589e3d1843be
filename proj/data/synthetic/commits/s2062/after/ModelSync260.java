if (fTree259 == null)
    return;
fTree259.dispose();
