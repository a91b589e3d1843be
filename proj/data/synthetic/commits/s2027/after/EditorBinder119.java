if (fAdapter118 == null)
    return;
fAdapter118.commitState();
