fModel12.validate();
