fViewer192.repaint();
