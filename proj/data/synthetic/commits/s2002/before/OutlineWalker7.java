fTable6.refresh();
