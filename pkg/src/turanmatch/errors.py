"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Instance is larger than the supported hard cap (vertices fit in one machine word)."""


class ParameterRangeError(ValueError):
    """A formula or constructor parameter lies outside its stated hypotheses."""


class ParseError(ValueError):
    """Base class for edge-list parsing failures."""


class MalformedLineError(ParseError):
    """A line does not match the expected "a b" layout."""


class SelfLoopError(ParseError):
    """An edge line joins a vertex to itself."""


class DuplicateEdgeError(ParseError):
    """The same edge appears twice."""


class LabelRangeError(ParseError):
    """A vertex label falls outside the declared range."""
