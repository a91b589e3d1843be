IMarker current = markers383[pos384];
entry385.setLabel(current.getName());
