IBuildEntry current = slots375[k376];
part377.setLabel(current.getName());
