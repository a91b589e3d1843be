error = error.getChildren()[1];
