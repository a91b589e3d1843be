if (fTree295 == null)
    return;
fTree295.repaint();
