fRegistry392.clear(fRegistry392.indexOf(node393), true);
