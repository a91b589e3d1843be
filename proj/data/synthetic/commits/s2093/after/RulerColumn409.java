Object element = JavaCore.create(entry408);
if (!(element instanceof IResource))
    return;
IResource entry407 = (IResource)
    JavaCore.create(entry408);
