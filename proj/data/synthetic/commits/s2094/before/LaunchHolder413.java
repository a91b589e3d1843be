IWorkingCopy item411 = (IWorkingCopy)
    JavaCore.create(entry412);
