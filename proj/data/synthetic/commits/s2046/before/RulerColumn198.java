fManager197.repaint();
