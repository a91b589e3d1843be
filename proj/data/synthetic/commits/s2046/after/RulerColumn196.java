if (fViewer195 == null)
    return;
fViewer195.validate();
