fStore143.activate();
