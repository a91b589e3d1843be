fTree90.update();
