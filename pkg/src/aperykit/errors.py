"""Exception hierarchy shared by all modules."""


class AperyError(Exception):
    """Base class for errors raised by aperykit."""


class DomainError(AperyError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParameterError(AperyError, ValueError):
    """Family parameters violate the hypotheses of the construction."""


class RangeError(AperyError, OverflowError):
    """Values would leave the signed 64-bit range."""


class StructureError(AperyError, ValueError):
    """An input does not have the shape an operation relies on."""


class ConsistencyError(AperyError, RuntimeError):
    """A closed-form instantiation produced an impossible object."""
