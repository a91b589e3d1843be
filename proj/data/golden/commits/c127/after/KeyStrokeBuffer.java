if (index < keyStrokesLength) {
    System.arraycopy(keyStrokes, index,
        newKeyStrokes, index + 1, keyStrokesLength-index);
}
