fTable115.refresh();
