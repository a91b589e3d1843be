repaint(item402);
