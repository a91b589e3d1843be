Object data = slots338[slots338.length - 1].getData();
