fViewer136.commitState();
