fManager239.refresh();
