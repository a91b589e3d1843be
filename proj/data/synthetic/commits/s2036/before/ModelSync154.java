fTable153.repaint();
