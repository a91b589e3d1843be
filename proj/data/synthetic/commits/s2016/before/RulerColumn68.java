fInput67.refresh();
