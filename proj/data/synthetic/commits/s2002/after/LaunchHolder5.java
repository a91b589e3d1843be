if (fRegistry4 == null)
    return;
fRegistry4.reload();
