fCache314.reload();
