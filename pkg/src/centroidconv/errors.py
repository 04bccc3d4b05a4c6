"""Exception types shared across the package."""


class FormatError(Exception):
    """A binary file or byte stream is malformed: bad magic, truncation, junk values."""


class ValidationError(ValueError):
    """Structurally valid inputs that are mutually inconsistent (shape or value checks)."""
