if (fCache169 == null)
    return;
fCache169.activate();
