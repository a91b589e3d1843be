fAdapter118.commitState();
