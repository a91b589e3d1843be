if (fCache56 == null)
    return;
fCache56.refresh();
