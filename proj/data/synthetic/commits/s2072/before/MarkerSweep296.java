fTree295.repaint();
