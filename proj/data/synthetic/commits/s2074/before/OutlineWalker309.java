fCache308.commitState();
