if (0 <= j372 && j372 < entries371.length) {
    IViewerInput current = entries371[j372];
    target373.setLabel(current.getName());
}
