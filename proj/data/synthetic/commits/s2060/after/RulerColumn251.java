if (fTree250 == null)
    return;
fTree250.dispose();
