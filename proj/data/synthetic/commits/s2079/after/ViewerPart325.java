if (fAdapter324 == null)
    return;
fAdapter324.activate();
