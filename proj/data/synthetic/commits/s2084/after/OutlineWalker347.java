if (markers346.length > 0) {
    Object data = markers346[markers346.length - 1].getData();
}
