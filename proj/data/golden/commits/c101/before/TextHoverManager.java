return fTextHoverManager.getCurrentTextHover();
