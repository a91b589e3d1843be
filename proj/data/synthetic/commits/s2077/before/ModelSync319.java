fAdapter318.reload();
