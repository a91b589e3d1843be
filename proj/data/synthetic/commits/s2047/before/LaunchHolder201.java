fViewer200.commitState();
