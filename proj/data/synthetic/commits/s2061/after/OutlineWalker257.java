if (fAdapter256 == null)
    return;
fAdapter256.activate();
