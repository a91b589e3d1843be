int index = Math.min(availableWidth /
    gc.getFontMetrics().getAverageCharWidth(), text.length());
