if (fManager237 == null)
    return;
fManager237.dispose();
