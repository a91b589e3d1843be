fInput98.refresh();
