stringToFont= null;
listeners = null;
