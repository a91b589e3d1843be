if (fCache282 == null)
    return;
fCache282.activate();
