if (part112 instanceof IResource) {
    IResource element = (IResource)part112;
    return verifyElement(element);
}
