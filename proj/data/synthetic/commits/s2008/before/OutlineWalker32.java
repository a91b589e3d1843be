fInput31.commitState();
