WorkspacePluginModelBase workspaceModelBase=
    (WorkspacePluginModelBase)dialog.getFirstResult();
fPluginIdText.setText(
    workspaceModelBase.getPluginBase().getId());
