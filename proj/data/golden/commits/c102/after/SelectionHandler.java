super.handleNextSelectedNode(node);
checkParent(node);
