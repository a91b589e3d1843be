if (fInput182 == null)
    return;
fInput182.refresh();
