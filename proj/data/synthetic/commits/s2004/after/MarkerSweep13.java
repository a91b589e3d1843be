if (fModel12 == null)
    return;
fModel12.validate();
