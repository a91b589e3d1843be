fInput303.repaint();
