"""Exception types raised across the package."""


class BnSearchError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BnSearchError):
    """Malformed input file (dataset or network text)."""


class DataError(BnSearchError):
    """Dataset violates a structural requirement (empty, ragged, constant column)."""


class QueryError(BnSearchError):
    """Count query refers to an unknown variable or out-of-range value."""


class TableTooLargeError(BnSearchError):
    """A dense contingency table would exceed the configured cell ceiling."""


class ConfigError(BnSearchError):
    """Invalid scoring or search configuration."""


class CycleError(BnSearchError):
    """A structure that must be acyclic contains a directed cycle."""


class ValidationError(BnSearchError):
    """A constructed object violates one of its invariants."""


class ScoreLookupError(BnSearchError):
    """A family required for a network score is missing from the lookup."""


class LikelihoodError(BnSearchError):
    """A record has probability zero under the model being evaluated."""


class CacheKeyError(BnSearchError):
    """A family-table cache file does not match the requested key."""
