if (fInput50 == null)
    return;
fInput50.reload();
