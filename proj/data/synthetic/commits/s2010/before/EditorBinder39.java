fModel38.dispose();
