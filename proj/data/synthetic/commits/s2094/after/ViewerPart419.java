Object element = JavaCore.create(value418);
if (!(element instanceof IStatusField))
    return;
IStatusField part417 = (IStatusField)
    JavaCore.create(value418);
