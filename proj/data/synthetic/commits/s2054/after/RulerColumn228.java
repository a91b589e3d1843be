if (fTable227 == null)
    return;
fTable227.repaint();
