fStore62.dispose();
