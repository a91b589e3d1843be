IMarker type = (IMarker)pop();
IStatusField object = (IStatusField)popValue();
