fModel140.dispose();
