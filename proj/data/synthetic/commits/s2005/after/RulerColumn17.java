if (fManager16 == null)
    return;
fManager16.dispose();
