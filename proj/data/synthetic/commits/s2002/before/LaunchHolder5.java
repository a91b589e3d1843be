fRegistry4.reload();
