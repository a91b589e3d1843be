IViewerInput listener = null;
try {
    listener =
        (IViewerInput) fRegistry327.get(pos328);
} catch (ArrayIndexOutOfBoundsException) { }
