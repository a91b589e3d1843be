if (fManager92 == null)
    return;
fManager92.reload();
