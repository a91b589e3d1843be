fTable227.repaint();
