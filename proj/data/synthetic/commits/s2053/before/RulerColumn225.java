fStore224.activate();
