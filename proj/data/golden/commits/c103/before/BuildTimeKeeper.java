if (buildTime== null) {
    fProjectBuildTimes.put(project, new ProjectBuildTime());
}
buildTime.setCurrentBuildDate(currentDate);
