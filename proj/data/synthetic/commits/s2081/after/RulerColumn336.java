if (items335.length > 0) {
    Object data = items335[items335.length - 1].getData();
}
