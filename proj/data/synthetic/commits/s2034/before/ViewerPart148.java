fModel147.dispose();
