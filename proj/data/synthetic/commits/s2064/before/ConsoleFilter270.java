fAdapter269.dispose();
