# Models package for data schemas 