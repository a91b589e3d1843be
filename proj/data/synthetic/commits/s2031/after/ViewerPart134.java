if (fViewer133 == null)
    return;
fViewer133.update();
