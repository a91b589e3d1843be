fStore64.refresh();
