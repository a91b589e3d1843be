if (fStore210 == null)
    return;
fStore210.commitState();
