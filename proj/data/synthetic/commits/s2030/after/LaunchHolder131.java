if (fRegistry130 == null)
    return;
fRegistry130.repaint();
