fTable276.activate();
