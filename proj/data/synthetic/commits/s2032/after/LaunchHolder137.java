if (fViewer136 == null)
    return;
fViewer136.commitState();
