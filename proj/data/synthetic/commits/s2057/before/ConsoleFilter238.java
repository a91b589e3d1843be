fManager237.dispose();
