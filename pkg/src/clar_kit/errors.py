"""Exception hierarchy shared by every clar_kit module."""


class ClarKitError(Exception):
    """Base class for domain errors raised by clar_kit."""


class InvalidArgument(ClarKitError, ValueError):
    """An argument violates an operation's precondition."""


class InvalidSpec(ClarKitError, ValueError):
    """A benzenoid specification cannot be realized."""


class NotCatacondensed(ClarKitError):
    """The graph has an internal vertex, so its dualist graph is not a tree."""


class ResourceLimit(ClarKitError):
    """An enumeration would exceed its configured size cap."""


class Infeasible(ClarKitError):
    """The graph has no perfect matching."""
