"""Exception types raised across the package."""


class SearchError(ValueError):
    pass


class InvalidParameter(SearchError):
    pass


class InvalidRun(SearchError):
    pass


class OutOfRange(SearchError):
    pass


class InvalidStrategy(SearchError):
    pass


class UnsupportedModel(SearchError):
    pass


class BracketError(SearchError):
    pass


class InvalidGrid(SearchError):
    pass


class SimulationError(RuntimeError):
    """Raised when a strategy prefix cannot reach the requested target."""
