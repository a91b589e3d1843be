fTree259.dispose();
