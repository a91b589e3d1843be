fManager286.activate();
