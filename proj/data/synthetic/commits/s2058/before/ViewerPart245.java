fManager244.repaint();
