fModel19.activate();
