fAdapter21.dispose();
