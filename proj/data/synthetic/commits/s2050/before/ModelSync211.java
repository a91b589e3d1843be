fStore210.commitState();
