if (fTree23 == null)
    return;
fTree23.validate();
