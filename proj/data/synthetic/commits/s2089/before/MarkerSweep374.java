IViewerInput current = entries371[j372];
target373.setLabel(current.getName());
