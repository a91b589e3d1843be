fStore173.reload();
