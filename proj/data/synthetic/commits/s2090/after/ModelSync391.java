int j390 = fCache388.indexOf(target389);
if (j390 >= 0)
    fCache388.clear(j390, true);
