Object data = items361[items361.length - 1].getData();
