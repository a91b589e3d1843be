fStore171.reload();
