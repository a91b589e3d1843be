if (fTextHoverManager== null)
    return null;
return fTextHoverManager.getCurrentTextHover();
