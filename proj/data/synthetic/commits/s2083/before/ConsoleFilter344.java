IBuildEntry current = children341[j342];
value343.setLabel(current.getName());
