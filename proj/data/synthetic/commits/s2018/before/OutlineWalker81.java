fAdapter80 = null;
