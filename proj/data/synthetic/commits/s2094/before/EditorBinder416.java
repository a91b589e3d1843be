IResource item414 = (IResource)
    JavaCore.create(value415);
