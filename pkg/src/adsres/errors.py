"""Exception types shared across the package."""


class ParityError(ValueError):
    """A K-type index is incompatible with the M-parity of the representation."""


class SingularElementError(ValueError):
    """Character evaluation requested on a non-regular group element (|tr g| = 2)."""


class BranchCutError(ValueError):
    """Spectral parameter placed on the continuous spectrum [1, oo)."""


class ContourError(ValueError):
    """Invalid contour: the line Im(lambda) = -y must avoid the density poles,
    and evaluation points must stay above it."""


class PoleError(ValueError):
    """Evaluation requested at (or too close to) a resonance pole."""

    def __init__(self, level: int, message: str | None = None):
        self.level = level
        super().__init__(message or f"zeta coincides with the pole at -{level}i")


class NonconvergenceError(RuntimeError):
    """A quadrature error estimate stayed above the requested tolerance."""
