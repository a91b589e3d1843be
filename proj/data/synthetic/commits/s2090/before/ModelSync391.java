fCache388.clear(fCache388.indexOf(target389), true);
