fTree364 = fTree364.getChildren()[0];
