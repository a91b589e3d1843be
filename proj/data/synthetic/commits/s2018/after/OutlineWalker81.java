fAdapter80.clear();
