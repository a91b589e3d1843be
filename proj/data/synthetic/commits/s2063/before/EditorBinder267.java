fStore266.activate();
