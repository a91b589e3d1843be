if (fModel289 == null)
    return;
fModel289.activate();
