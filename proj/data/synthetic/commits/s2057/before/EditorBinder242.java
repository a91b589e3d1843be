fRegistry241.dispose();
