IResource entry407 = (IResource)
    JavaCore.create(entry408);
