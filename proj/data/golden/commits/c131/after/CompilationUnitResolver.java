IJavaElement element= JavaCore.create(resource);
if (!(element instanceof ICompilationUnit))
    continue;
ICompilationUnit cu= (ICompilationUnit)
    JavaCore.create(resource);
