IJobChangeListener listener =
    (IJobChangeListener) global.get(i);
