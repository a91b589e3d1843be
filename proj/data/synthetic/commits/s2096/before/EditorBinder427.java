fStore425 = (IWorkingCopy) root.findMember(fManager426);
if (fStore425 != null) {
    initializeFromMember();
}
