if (fViewer200 == null)
    return;
fViewer200.commitState();
