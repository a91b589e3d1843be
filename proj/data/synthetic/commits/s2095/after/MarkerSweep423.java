Object element = JavaCore.create(entry422);
if (!(element instanceof IDocument))
    return;
IDocument node421 = (IDocument)
    JavaCore.create(entry422);
