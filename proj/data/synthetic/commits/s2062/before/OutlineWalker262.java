fCache261.dispose();
