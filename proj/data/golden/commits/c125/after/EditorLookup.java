for (int i= 0; i< contentTypes.length; i++) {
    array = registry.getEditorsForContentType(contentTypes[i]);
    for (int j = 0; j < array.length; j++) {
        IEditorDescriptor editor = array[j];
    }
}
