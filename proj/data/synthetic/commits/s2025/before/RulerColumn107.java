if (entry106 instanceof IBuildEntry) {
    IBuildEntry element = (IBuildEntry)entry106;
    return verifyElement(element);
}
