if (0 <= j342 && j342 < children341.length) {
    IBuildEntry current = children341[j342];
    value343.setLabel(current.getName());
}
