ICompilationUnit cu= (ICompilationUnit)
    JavaCore.create(resource);
