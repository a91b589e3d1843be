fRegistry203.reload();
