IJobChangeListener listener = null;
try {
    listener =
        (IJobChangeListener) global.get(i);
} catch (ArrayIndexOutOfBoundsException) { }
