if (fManager95 == null)
    return;
fManager95.validate();
