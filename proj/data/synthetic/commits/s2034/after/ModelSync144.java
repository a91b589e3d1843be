if (fStore143 == null)
    return;
fStore143.activate();
