fInput212.refresh();
