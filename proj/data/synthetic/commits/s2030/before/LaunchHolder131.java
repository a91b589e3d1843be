fRegistry130.repaint();
