super.handleIWorkingCopy(entry292);
validate(entry292);
