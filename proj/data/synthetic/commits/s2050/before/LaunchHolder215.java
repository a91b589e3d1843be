fManager214.dispose();
