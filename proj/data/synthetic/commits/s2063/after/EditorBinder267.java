if (fStore266 == null)
    return;
fStore266.activate();
