fManager95.validate();
