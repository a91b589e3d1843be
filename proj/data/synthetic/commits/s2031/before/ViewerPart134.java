fViewer133.update();
