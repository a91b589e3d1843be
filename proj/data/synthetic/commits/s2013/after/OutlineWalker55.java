if (fTable54 == null)
    return;
fTable54.dispose();
