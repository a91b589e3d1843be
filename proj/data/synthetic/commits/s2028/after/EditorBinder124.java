if (fStore123 == null)
    return;
fStore123.dispose();
