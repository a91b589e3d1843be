if (fViewer192 == null)
    return;
fViewer192.repaint();
