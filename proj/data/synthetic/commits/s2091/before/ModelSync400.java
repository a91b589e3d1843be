IViewerInput current = markers397[index398];
part399.setLabel(current.getName());
