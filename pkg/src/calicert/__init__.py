"""calicert: exact certification of the singular-value region computations
behind flatness criteria for calibrated graphs in R^7 and R^8."""

__version__ = "0.1.0"
