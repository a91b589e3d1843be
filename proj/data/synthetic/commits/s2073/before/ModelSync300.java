fInput299.validate();
