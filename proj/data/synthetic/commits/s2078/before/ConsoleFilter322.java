fInput321.reload();
