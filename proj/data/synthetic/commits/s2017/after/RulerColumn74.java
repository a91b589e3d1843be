if (fAdapter73 == null)
    return;
fAdapter73.update();
