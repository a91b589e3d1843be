fTable185.repaint();
