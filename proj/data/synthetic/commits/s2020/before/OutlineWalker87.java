fStore86.refresh();
