if (fCache127 == null)
    return;
fCache127.validate();
