Object element = JavaCore.create(entry412);
if (!(element instanceof IWorkingCopy))
    return;
IWorkingCopy item411 = (IWorkingCopy)
    JavaCore.create(entry412);
