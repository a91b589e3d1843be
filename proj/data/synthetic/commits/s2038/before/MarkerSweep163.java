fViewer162.update();
