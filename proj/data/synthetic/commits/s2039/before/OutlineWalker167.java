if (entry166 instanceof IWorkingCopy) {
    IWorkingCopy element = (IWorkingCopy)entry166;
    return verifyElement(element);
}
