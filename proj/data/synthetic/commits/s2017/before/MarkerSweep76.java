fStore75.repaint();
