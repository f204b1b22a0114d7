"""Exception types shared across the package."""


class DomainError(ValueError):
    """Bad user input: invalid type, weight outside a lattice, bad quotient name."""


class InvalidTypeError(DomainError):
    pass


class NotInLatticeError(DomainError):
    """A weight violates one of the congruences cutting out X(T)."""

    def __init__(self, weight, congruence):
        a, d = congruence
        lhs = " + ".join(f"{c}*{m}" for c, m in zip(a, weight) if c)
        super().__init__(f"weight {tuple(weight)} not in X(T): {lhs or '0'} != 0 mod {d}")
        self.weight = tuple(weight)
        self.congruence = congruence


class GuardExceeded(RuntimeError):
    """A size guard (rank, orbit size, expansion size) refused the computation."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed; indicates a bug, never bad input."""
