fInput50.reload();
