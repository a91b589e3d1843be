fAdapter150.dispose();
