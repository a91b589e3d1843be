if (fCache308 == null)
    return;
fCache308.commitState();
