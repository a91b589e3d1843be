fContainer= (IContainer) root.findMember(fContainerFullPath);
if (fContainer!= null) {
    initializeFromContainer();
}
