IDocument listener = null;
try {
    listener =
        (IDocument) fInput330.get(index331);
} catch (ArrayIndexOutOfBoundsException) { }
