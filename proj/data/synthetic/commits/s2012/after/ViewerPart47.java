if (fManager44 == null) {
    fManager44 = new IStatusField();
    fRegistry45.put(value46, fManager44);
}
fManager44.markDirty(value46);
