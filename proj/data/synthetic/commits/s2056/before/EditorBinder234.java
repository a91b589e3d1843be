fCache233.commitState();
