if (fTable217 == null)
    return;
fTable217.activate();
