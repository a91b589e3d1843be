fViewer195.validate();
