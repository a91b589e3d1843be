fManager16.dispose();
