fCache56.refresh();
