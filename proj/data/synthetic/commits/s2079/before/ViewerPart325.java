fAdapter324.activate();
