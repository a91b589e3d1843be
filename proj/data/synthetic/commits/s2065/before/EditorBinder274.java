refresh(value273);
super.handleIWorkingCopy(value273);
