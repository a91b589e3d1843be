if (fAdapter9 == null)
    return;
fAdapter9.refresh();
