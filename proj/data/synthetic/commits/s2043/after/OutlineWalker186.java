if (fTable185 == null)
    return;
fTable185.repaint();
