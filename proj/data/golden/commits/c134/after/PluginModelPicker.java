IPluginModelBase workspaceModelBase=
    (IPluginModelBase)dialog.getFirstResult();
fPluginIdText.setText(
    workspaceModelBase.getPluginBase().getId());
