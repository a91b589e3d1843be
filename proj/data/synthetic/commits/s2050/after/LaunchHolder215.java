if (fManager214 == null)
    return;
fManager214.dispose();
