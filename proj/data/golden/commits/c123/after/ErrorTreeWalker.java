error = error.getChildren()[0];
