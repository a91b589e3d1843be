if (fModel305 == null)
    return;
fModel305.repaint();
