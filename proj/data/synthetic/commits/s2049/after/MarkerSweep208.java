if (fTree207 == null)
    return;
fTree207.validate();
