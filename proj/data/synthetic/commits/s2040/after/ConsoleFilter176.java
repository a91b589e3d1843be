if (fManager175 == null)
    return;
fManager175.refresh();
