Object element = JavaCore.create(value415);
if (!(element instanceof IResource))
    return;
IResource item414 = (IResource)
    JavaCore.create(value415);
