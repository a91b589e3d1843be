fInput35.commitState();
