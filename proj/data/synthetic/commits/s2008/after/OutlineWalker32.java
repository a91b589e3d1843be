if (fInput31 == null)
    return;
fInput31.commitState();
