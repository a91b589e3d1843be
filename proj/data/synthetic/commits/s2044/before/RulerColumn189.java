fInput188.validate();
