if (fStore165.isEmpty()) return true;
if (entry166 instanceof IWorkingCopy) {
    IWorkingCopy element = (IWorkingCopy)entry166;
    return verifyElement(element);
}
