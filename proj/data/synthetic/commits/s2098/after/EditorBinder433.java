IWorkingCopy entry432 =
    (IWorkingCopy)dialog.getFirstResult();
updateText(entry432.getId());
