if (fModel157 == null) {
    fModel157 = new IWorkingCopy();
    fModel158.put(part159, fModel157);
}
fModel157.markDirty(part159);
