"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class CordialError(Exception):
    """Base class for all errors raised by cordialcube."""


class DimensionError(CordialError, ValueError):
    """A labeling, bijection or bit vector has the wrong length."""


class StructureError(CordialError, ValueError):
    """A graph or arrangement violates a structural invariant."""


class DomainError(CordialError, ValueError):
    """An operation was applied outside the class of graphs it is defined on."""


class ConfigurationError(CordialError, KeyError):
    """A named object (bijection, cube, fixture) could not be resolved."""

    def __str__(self):
        # KeyError quotes its message by default
        return str(self.args[0]) if self.args else ""


class BudgetError(CordialError, RuntimeError):
    """An exhaustive search would exceed the configured work budget."""

    def __init__(self, message: str, work: int, budget: int):
        super().__init__(message)
        self.work = work
        self.budget = budget


class InfeasibleError(CordialError, RuntimeError):
    """No orientation of the free edges balances the arc-label counts.

    ``best`` holds the most balanced triple that is reachable.
    """

    def __init__(self, message: str, best):
        super().__init__(message)
        self.best = best
