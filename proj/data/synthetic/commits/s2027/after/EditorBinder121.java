if (fViewer120 == null)
    return;
fViewer120.validate();
