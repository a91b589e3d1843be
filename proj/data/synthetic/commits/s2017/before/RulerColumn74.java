fAdapter73.update();
