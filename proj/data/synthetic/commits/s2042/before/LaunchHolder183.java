fInput182.refresh();
