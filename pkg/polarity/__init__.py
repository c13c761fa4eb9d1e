# Polarity module