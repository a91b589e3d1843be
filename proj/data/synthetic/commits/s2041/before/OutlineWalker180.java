fInput179.refresh();
