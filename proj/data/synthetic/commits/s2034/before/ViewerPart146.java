fRegistry145.activate();
