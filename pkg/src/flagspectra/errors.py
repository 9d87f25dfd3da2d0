"""Shared exception types."""


class CapExceeded(RuntimeError):
    """An enumeration or search exceeded its configured size cap."""


class InputFormatError(ValueError):
    """A file or JSON payload does not match the documented format."""
