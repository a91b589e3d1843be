if (fModel230 == null)
    return;
fModel230.activate();
