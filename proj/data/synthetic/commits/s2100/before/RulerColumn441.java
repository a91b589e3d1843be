IMarker value439 = (IMarker)
    JavaCore.create(part440);
