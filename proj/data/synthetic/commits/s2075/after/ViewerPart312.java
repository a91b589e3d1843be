if (fStore311 == null)
    return;
fStore311.commitState();
