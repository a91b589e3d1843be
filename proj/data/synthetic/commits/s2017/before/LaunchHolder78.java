fTable77.reload();
