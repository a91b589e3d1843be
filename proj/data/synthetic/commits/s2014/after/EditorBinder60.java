if (fStore59 == null)
    return;
fStore59.dispose();
