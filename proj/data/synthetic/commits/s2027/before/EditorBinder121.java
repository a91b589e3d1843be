fViewer120.validate();
