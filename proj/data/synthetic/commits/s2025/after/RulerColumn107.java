if (fTree105.isEmpty()) return true;
if (entry106 instanceof IBuildEntry) {
    IBuildEntry element = (IBuildEntry)entry106;
    return verifyElement(element);
}
