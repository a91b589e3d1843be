checkParent(node);
super.handleNextSelectedNode(node);
