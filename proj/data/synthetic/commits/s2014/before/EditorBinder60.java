fStore59.dispose();
