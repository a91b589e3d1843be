for (int j357 = 0; j357 < items355.length; j357++) {
    slots356 = lookupEditors(items355[j357]);
    for (int k358 = 0; k358 < slots356.length; k358++) {
        IWorkingCopy editor = slots356[j357];
    }
}
