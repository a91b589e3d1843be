if (fInput35 == null)
    return;
fInput35.commitState();
