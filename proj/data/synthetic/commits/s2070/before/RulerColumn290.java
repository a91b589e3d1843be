fModel289.activate();
