if (fManager286 == null)
    return;
fManager286.activate();
