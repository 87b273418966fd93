"""Exception types shared across the package."""


class EtalabError(Exception):
    """Base class for all package-specific errors."""


class AccuracyUnreachable(EtalabError):
    """The accelerated series cannot certify the requested error bound."""


class DenominatorPole(EtalabError):
    """Evaluation requested too close to a zero of 1 - 2^(1-s)."""


class PoleError(EtalabError):
    """Gamma evaluated at a non-positive integer."""


class AngleTooLarge(EtalabError):
    """Disk construction requested below the acute-angle threshold index."""


class WindowExhausted(EtalabError):
    """No stable run found below the configured scan ceiling."""


class ZeroDenominator(EtalabError):
    """A denominator value is numerically indistinguishable from zero."""

    def __init__(self, magnitude: float, n: int | None = None):
        where = f"|S_{n}|" if n is not None else "denominator"
        super().__init__(f"{where} = {magnitude:.3e} is below the zero threshold")
        self.n = n
        self.magnitude = magnitude
