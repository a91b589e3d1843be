if (fCache233 == null)
    return;
fCache233.commitState();
