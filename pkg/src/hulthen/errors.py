"""Exception types raised by the hulthen package."""


class HulthenError(Exception):
    """Base class for all package errors."""


class DomainError(HulthenError, ValueError):
    """Argument outside the domain of a function (r <= 0, gamma pole, ...)."""


class DegenerateDiscriminantError(HulthenError, ValueError):
    """A square root in the Nikiforov-Uvarov construction has a negative radicand."""


class BranchSelectionError(HulthenError):
    """No pi(s) candidate gives tau(s) with negative slope."""


class UnboundStateError(HulthenError):
    """The requested state has no normalizable eigenfunction."""


class StateNotFoundError(HulthenError):
    """A state is missing from a numerically computed spectrum."""

    def __init__(self, mode, index, available):
        self.mode = mode
        self.index = index
        self.available = available
        super().__init__(
            f"state with {index} nodes not found in {mode} spectrum "
            f"({available} bound states available)"
        )
