fCache169.activate();
