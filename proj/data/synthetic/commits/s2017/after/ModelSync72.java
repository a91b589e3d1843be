if (fInput71 == null)
    return;
fInput71.commitState();
