IDocument listener =
    (IDocument) fInput330.get(index331);
