if (fManager244 == null)
    return;
fManager244.repaint();
