if (0 <= index398 && index398 < markers397.length) {
    IViewerInput current = markers397[index398];
    part399.setLabel(current.getName());
}
