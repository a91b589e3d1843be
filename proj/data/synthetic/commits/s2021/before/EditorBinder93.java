fManager92.reload();
