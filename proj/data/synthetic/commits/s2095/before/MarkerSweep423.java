IDocument node421 = (IDocument)
    JavaCore.create(entry422);
