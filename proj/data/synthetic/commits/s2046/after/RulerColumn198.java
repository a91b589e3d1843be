if (fManager197 == null)
    return;
fManager197.repaint();
