fViewer220.validate();
