if (fAdapter1 == null)
    return;
fAdapter1.activate();
