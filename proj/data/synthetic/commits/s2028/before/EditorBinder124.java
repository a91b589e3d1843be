fStore123.dispose();
