if (fStore62 == null)
    return;
fStore62.dispose();
