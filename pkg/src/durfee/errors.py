"""Exceptions shared across the engine."""


class ResourceLimitError(ValueError):
    """Requested size exceeds the configured resource cap."""

    def __init__(self, n, cap):
        super().__init__(f"n={n} exceeds the resource cap of {cap}")
        self.n = n
        self.cap = cap


class CohortParseError(ValueError):
    """Malformed cohort CSV or profile file; carries the offending row number."""

    def __init__(self, row, message):
        super().__init__(f"row {row}: {message}")
        self.row = row


class DegenerateDataError(ValueError):
    """Statistic undefined for the given data (too few points, zero variance)."""
