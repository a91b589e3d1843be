fRegistry279.reload();
