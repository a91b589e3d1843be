WorkspaceIBuildEntry entry432 =
    (WorkspaceIBuildEntry)dialog.getFirstResult();
updateText(entry432.getId());
