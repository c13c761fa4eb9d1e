# Conversion module