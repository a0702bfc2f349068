"""Exception types shared across the package."""


class UcgError(Exception):
    """Base class for all package-specific errors."""


class NotUcgError(UcgError):
    """The operation requires a uniform central graph and the input is not one."""


class RadiusTooSmallError(UcgError):
    """The operation requires radius at least 2."""


class NotSpanningSubgraphError(UcgError):
    """The candidate graph is not a spanning subgraph of the host."""


class BoundExceededError(UcgError):
    """An exhaustive search was asked to exceed its configured size bound."""


class PreconditionError(UcgError):
    """A documented hypothesis of the operation does not hold for the input."""


class InternalCheckError(UcgError):
    """A construction failed its own re-verification; indicates a bug or a
    genuine gap instance, never silently returned."""


class InvalidDropError(UcgError):
    """A deletion list names vertices the construction cannot drop."""


class DomainError(UcgError, ValueError):
    """A family generator was called outside its parameter domain."""


class MalformedInputError(UcgError, ValueError):
    """Unparseable graph input (graph6 or edge-list text)."""
