if (fRegistry26 == null) {
    fInput27.put(node28, new IWorkingCopy());
}
fRegistry26.markDirty(node28);
