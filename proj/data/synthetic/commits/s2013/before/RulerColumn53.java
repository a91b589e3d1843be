fStore52.activate();
