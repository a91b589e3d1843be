if (fInput188 == null)
    return;
fInput188.validate();
