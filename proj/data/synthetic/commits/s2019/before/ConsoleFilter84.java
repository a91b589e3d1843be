fRegistry83.reload();
