fTable54.dispose();
