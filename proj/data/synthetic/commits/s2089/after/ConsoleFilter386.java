if (0 <= pos384 && pos384 < markers383.length) {
    IMarker current = markers383[pos384];
    entry385.setLabel(current.getName());
}
