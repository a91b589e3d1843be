if (fModel247 == null)
    return;
fModel247.reload();
