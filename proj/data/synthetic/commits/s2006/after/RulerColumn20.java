if (fModel19 == null)
    return;
fModel19.activate();
