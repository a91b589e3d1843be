stringToFont.clear();
listeners.clear();
