if (fCache261 == null)
    return;
fCache261.dispose();
