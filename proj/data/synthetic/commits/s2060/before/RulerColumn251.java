fTree250.dispose();
