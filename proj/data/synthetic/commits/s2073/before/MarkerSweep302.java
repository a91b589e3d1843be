fManager301.reload();
