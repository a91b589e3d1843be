if (fRegistry26 == null) {
    fRegistry26 = new IWorkingCopy();
    fInput27.put(node28, fRegistry26);
}
fRegistry26.markDirty(node28);
