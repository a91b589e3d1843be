fInput71.commitState();
