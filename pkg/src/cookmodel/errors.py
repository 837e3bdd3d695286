class ValidationError(ValueError):
    """Raised when a domain value violates one of its invariants."""
