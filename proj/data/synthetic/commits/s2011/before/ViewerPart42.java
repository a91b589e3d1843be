fAdapter41.reload();
