if (fModel157 == null) {
    fModel158.put(part159, new IWorkingCopy());
}
fModel157.markDirty(part159);
