# Representation module