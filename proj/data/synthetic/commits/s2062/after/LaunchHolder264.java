if (fModel263 == null)
    return;
fModel263.validate();
