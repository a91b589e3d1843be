Object element = JavaCore.create(part440);
if (!(element instanceof IMarker))
    return;
IMarker value439 = (IMarker)
    JavaCore.create(part440);
