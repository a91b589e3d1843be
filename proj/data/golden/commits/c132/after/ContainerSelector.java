IResource found= root.findMember(fContainerFullPath);
if (found instanceof IContainer) {
    fContainer= (IContainer) found;
    if (fContainer!= null) {
        initializeFromContainer();
    }
}
