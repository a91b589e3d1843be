if (fInput303 == null)
    return;
fInput303.repaint();
