"""Exception hierarchy.

Each class carries a short ``kind`` used by the command line front end to
produce a one-line, machine-parsable reason and to pick the exit code.
"""


class RhoError(Exception):
    kind = "error"


class DimensionError(RhoError, ValueError):
    """Profile length, vertex count or coloring size does not line up."""

    kind = "dimension"


class DomainError(RhoError, ValueError):
    """An argument lies outside the operation's domain."""

    kind = "domain"


class ParameterError(RhoError, ValueError):
    kind = "parameter"


class ValidationError(RhoError, ValueError):
    """Input object breaks an invariant, e.g. an improper coloring."""

    kind = "validation"


class ResourceError(RhoError, RuntimeError):
    """A configured size cap would be exceeded."""

    kind = "resource"


class BudgetExhaustedError(ResourceError):
    """No feasible profile exists up to the search budget."""

    kind = "budget"

    def __init__(self, message: str, largest_tried: int):
        super().__init__(message)
        self.largest_tried = largest_tried


class NoRainbowError(RhoError):
    """A coloring admits no rainbow transversal.

    ``hall_set`` is a set of host vertices whose cliques jointly use fewer
    colors than there are vertices in the set.
    """

    kind = "no-rainbow"

    def __init__(self, message: str, hall_set: tuple[int, ...], colors_used: int):
        super().__init__(message)
        self.hall_set = hall_set
        self.colors_used = colors_used
