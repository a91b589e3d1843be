fManager367 = fManager367.getChildren()[1];
