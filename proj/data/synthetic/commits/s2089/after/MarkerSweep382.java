if (0 <= pos380 && pos380 < slots379.length) {
    IBuildEntry current = slots379[pos380];
    part381.setLabel(current.getName());
}
