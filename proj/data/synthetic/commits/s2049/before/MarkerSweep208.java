fTree207.validate();
