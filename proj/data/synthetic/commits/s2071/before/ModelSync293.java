validate(entry292);
super.handleIWorkingCopy(entry292);
