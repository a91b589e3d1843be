Object found = root.findMember(fManager426);
if (found instanceof IWorkingCopy) {
    fStore425 = (IWorkingCopy) found;
    if (fStore425 != null) {
        initializeFromMember();
    }
}
