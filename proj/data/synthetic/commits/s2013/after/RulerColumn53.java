if (fStore52 == null)
    return;
fStore52.activate();
