if (fViewer220 == null)
    return;
fViewer220.validate();
