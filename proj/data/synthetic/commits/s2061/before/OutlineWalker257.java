fAdapter256.activate();
