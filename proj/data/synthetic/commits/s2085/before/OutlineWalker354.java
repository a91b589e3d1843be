for (int index352 = 0; index352 < slots350.length; index352++) {
    items351 = lookupEditors(slots350[index352]);
    for (int i353 = 0; i353 < items351.length; i353++) {
        IDecoration editor = items351[index352];
    }
}
