fTree252.refresh();
