int index = fTree.indexOf(item);
if (index >= 0)
    fTree.clear(index, true);
