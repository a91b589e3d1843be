int index =
    availableWidth / gc.getFontMetrics().getAverageCharWidth();
