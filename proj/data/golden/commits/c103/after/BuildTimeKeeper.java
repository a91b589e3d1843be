if (buildTime== null) {
    buildTime= new ProjectBuildTime();
    fProjectBuildTimes.put(project, buildTime);
}
buildTime.setCurrentBuildDate(currentDate);
