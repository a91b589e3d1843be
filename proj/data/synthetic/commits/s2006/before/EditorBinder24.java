fTree23.validate();
