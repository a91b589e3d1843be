fModel305.repaint();
