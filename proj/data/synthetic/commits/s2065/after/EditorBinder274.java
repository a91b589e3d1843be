super.handleIWorkingCopy(value273);
refresh(value273);
