if (fViewer162 == null)
    return;
fViewer162.update();
