if (fStore224 == null)
    return;
fStore224.activate();
