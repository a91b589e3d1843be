if (0 <= k376 && k376 < slots375.length) {
    IBuildEntry current = slots375[k376];
    part377.setLabel(current.getName());
}
