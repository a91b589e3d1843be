if (fInput299 == null)
    return;
fInput299.validate();
