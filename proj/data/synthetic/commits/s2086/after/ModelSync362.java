if (items361.length > 0) {
    Object data = items361[items361.length - 1].getData();
}
