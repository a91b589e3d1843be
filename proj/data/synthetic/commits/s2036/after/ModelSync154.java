if (fTable153 == null)
    return;
fTable153.repaint();
