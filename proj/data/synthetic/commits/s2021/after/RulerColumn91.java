if (fTree90 == null)
    return;
fTree90.update();
