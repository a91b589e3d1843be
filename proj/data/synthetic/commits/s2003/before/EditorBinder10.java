fAdapter9.refresh();
