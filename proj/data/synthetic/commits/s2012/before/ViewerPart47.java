if (fManager44 == null) {
    fRegistry45.put(value46, new IStatusField());
}
fManager44.markDirty(value46);
