if (fStore75 == null)
    return;
fStore75.repaint();
