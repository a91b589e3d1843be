if (obj instanceof IAdaptable) {
    IAdaptable element = (IAdaptable)obj;
    if (verifyElement(element)==false) return false;
}
