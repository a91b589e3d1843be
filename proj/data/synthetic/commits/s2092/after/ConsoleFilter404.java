if (item402.getClass() == fTree403) {
    repaint(item402);
}
