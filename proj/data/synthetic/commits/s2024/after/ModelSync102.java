if (fAdapter101 == null)
    return;
fAdapter101.refresh();
