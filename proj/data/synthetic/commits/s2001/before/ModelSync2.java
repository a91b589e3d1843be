fAdapter1.activate();
