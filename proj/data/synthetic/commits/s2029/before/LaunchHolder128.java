fCache127.validate();
