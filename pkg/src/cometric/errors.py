"""Exception hierarchy shared by all modules."""


class CometricError(Exception):
    """Base class for every error raised by this package."""


class NonIntegerSpectrum(CometricError):
    """Integer eigenvalue search left residual dimensions unaccounted."""


class NonRationalValue(CometricError):
    """A quantity expected to be rational came out irrational."""


class NotAScheme(CometricError):
    """A relation partition violates one of the scheme axioms."""

    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        msg = f"not an association scheme (axiom: {axiom})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ClassCountMismatch(CometricError):
    """Number of common eigenspaces differs from d + 1."""


class NegativeKrein(CometricError):
    """A computed Krein parameter is negative (internal bug guard)."""


class NotTridiagonal(CometricError):
    """First Krein matrix is not tridiagonal under the given ordering."""


class RepeatedRows(CometricError):
    """The first idempotent has repeated rows; embedding not injective."""


class AntipodalClass(CometricError):
    """Derived design undefined: the class eigenvalue equals -theta_0*."""


class SelfClass(CometricError):
    """Derived design undefined for the identity class."""


class HypothesisUnmet(CometricError):
    """A closed-form predicate was invoked outside its hypotheses."""


class DegenerateSphere(CometricError):
    """Derived-design sphere would have dimension < 1."""


class InconsistentMoments(CometricError):
    """Moment sequence is not realizable by a valid weight triple."""

    def __init__(self, step, detail=""):
        self.step = step
        msg = f"inconsistent moment sequence at step {step}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class UnsupportedParameters(CometricError):
    """Named scheme family parameters outside the documented range."""


class ParseError(CometricError):
    """Scheme or moments file could not be parsed."""


class StructureError(CometricError):
    """Parsed scheme file is structurally invalid."""


class DivisionByZero(CometricError):
    """A diagonal Catalan entry vanished during weight recovery."""
