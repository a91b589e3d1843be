if (selections.length > 0) {
    Object data =
        selections[selections.length-1].getData();
    IValue val= null;
    if (data instanceof IndexedVariablePartition) {
        // no details for partitions
        return;
    }
}
