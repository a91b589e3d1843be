if (fTable276 == null)
    return;
fTable276.activate();
