fManager175.refresh();
