fTable217.activate();
