if (fAdapter269 == null)
    return;
fAdapter269.dispose();
