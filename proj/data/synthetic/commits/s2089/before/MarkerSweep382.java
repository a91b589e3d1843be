IBuildEntry current = slots379[pos380];
part381.setLabel(current.getName());
