IResource entry435 = (IResource)
    JavaCore.create(item436);
