IViewerInput listener =
    (IViewerInput) fRegistry327.get(pos328);
