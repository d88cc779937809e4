"""Exception hierarchy shared by all biratlab modules."""


class BiratlabError(Exception):
    """Base class for all library errors."""


# --- projective primitives ---

class ZeroVector(BiratlabError):
    """All coordinates of a would-be projective point are (numerically) zero."""


class IndeterminateImage(BiratlabError):
    """All components of a map vanish at the point; the image is undefined."""


# --- exact polynomial algebra ---

class DegenerateComposition(BiratlabError):
    """A composition produced the identically-zero triple (not dominant)."""


class TermBlowup(BiratlabError):
    """A symbolic computation exceeded the configured monomial cap.

    Carries the degrees computed so far and the last completed iterate index.
    """

    def __init__(self, message, degrees=None, last_index=0):
        super().__init__(message)
        self.degrees = list(degrees or [])
        self.last_index = last_index


class PositiveDimensionalLocus(BiratlabError):
    """The common zero set of the components contains a curve."""


class NotInverse(BiratlabError):
    """A claimed inverse pair failed certification; carries the offending composition."""

    def __init__(self, message, composition=None):
        super().__init__(message)
        self.composition = composition


# --- orbits / potentials ---

class OrbitThroughIndeterminacy(BiratlabError):
    """An orbit landed exactly on an indeterminacy point."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class OrbitHitsIndeterminacy(BiratlabError):
    """An orbit entered the indeterminacy tolerance at the given step."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class DepthTooShallow(BiratlabError):
    """The requested depth leaves the escape-rate increment above tolerance."""


class UnsupportedDegree(BiratlabError):
    """Operation requires algebraic degree >= 2."""


# --- periodic points ---

class JacobianSingular(BiratlabError):
    """Newton step hit a numerically singular Jacobian."""


class NoConvergence(BiratlabError):
    """Newton iteration did not converge within the step limit."""


class DegenerateFamily(BiratlabError):
    """The periodicity equation is identically zero (non-isolated solutions)."""


class MixedPeriods(BiratlabError):
    """Periodic-point aggregation requires a single shared period and nonempty input."""


# --- local manifolds ---

class Resonance(BiratlabError):
    """Multiplier resonance at the given series order."""

    def __init__(self, message, order=None):
        super().__init__(message)
        self.order = order


class ResidualTooLarge(BiratlabError):
    """No admissible domain radius meets the conjugacy residual bound."""


# --- orbit estimators ---

class OrbitLeftDomain(BiratlabError):
    """An orbit left the validity domain at the given step."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class DegenerateDifferential(BiratlabError):
    """A differential along the orbit is numerically singular."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


# --- map-spec ingestion / pipeline ---

class ParseError(BiratlabError):
    """Malformed map-spec document; carries a location hint."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class DegreeMismatch(BiratlabError):
    """A coefficient record's exponents do not sum to the declared degree."""
