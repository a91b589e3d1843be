fAdapter101.refresh();
