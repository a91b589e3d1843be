fModel263.validate();
