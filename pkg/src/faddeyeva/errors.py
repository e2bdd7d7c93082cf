class InvalidArgumentError(ValueError):
    """Raised for NaN or infinite arguments."""
