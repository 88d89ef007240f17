"""Shared exception types."""


class RenasError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateNameError(RenasError):
    """An identifier yields no words (only delimiters/digits) or an edit
    would leave a name empty."""


class JavaParseError(RenasError):
    """A source file could not be tokenized or parsed."""


class EntityResolutionError(RenasError):
    """A (file, line, name) query matched no entity."""


class AmbiguousEntityError(EntityResolutionError):
    """A (file, line, name) query matched more than one entity."""


class NotApplicableError(RenasError):
    """A renaming operation was applied to a name it does not fit."""


class GraphError(RenasError):
    """Invalid graph query, e.g. an unknown origin node."""


class CacheFormatError(RenasError):
    """An index cache file has the wrong format or version."""


class DatasetFormatError(RenasError):
    """An evaluation dataset file violates the documented schema."""
