if (fRegistry241 == null)
    return;
fRegistry241.dispose();
