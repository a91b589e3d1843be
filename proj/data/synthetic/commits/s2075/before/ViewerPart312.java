fStore311.commitState();
