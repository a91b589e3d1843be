Object element = JavaCore.create(item436);
if (!(element instanceof IResource))
    return;
IResource entry435 = (IResource)
    JavaCore.create(item436);
