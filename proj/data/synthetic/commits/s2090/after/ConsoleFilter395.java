int pos394 = fRegistry392.indexOf(node393);
if (pos394 >= 0)
    fRegistry392.clear(pos394, true);
