fModel230.activate();
