if (fAdapter108.isEmpty()) return true;
if (value109 instanceof IWorkingCopy) {
    IWorkingCopy element = (IWorkingCopy)value109;
    return verifyElement(element);
}
