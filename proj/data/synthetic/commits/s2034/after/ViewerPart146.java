if (fRegistry145 == null)
    return;
fRegistry145.activate();
