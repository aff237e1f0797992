class ValidationError(ValueError):
    """Bad input: malformed JSON entry, unknown label, wrong dimension."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class UnknownLabelError(ValidationError):
    pass


class DimensionMismatchError(ValidationError):
    def __init__(self, expected, actual, location=None):
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"dimension mismatch: expected n = {expected}, segments sum to {actual}",
            location,
        )
