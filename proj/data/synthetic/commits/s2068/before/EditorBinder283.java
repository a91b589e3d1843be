fCache282.activate();
