fModel247.reload();
