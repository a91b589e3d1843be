fTree.clear(fTree.indexOf(item), true);
