if (0 <= index && index < fFilteredProposals.length){
    ICompletionProposal current= fFilteredProposals[index];
    item.setText(current.getDisplayString());
    item.setImage(current.getImage());
    item.setData(current);
}
