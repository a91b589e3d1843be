IStatusField part417 = (IStatusField)
    JavaCore.create(value418);
