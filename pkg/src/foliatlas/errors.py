"""Exception hierarchy.

Three coarse families, matching the CLI exit codes: input errors (bad cell
data, axiom violations), precondition errors (a well-formed input that an
operation does not apply to), and invariant violations (an internal identity
failed; always a bug or a broken hypothesis, never expected).
"""


class FoliatlasError(Exception):
    """Base class for all library errors."""


class InputError(FoliatlasError):
    """The input data itself is rejected (CLI exit code 1)."""


class PreconditionError(FoliatlasError):
    """The operation does not apply to this input (CLI exit code 2)."""


class InvariantViolation(FoliatlasError):
    """A verified identity failed at runtime (CLI exit code 3)."""


# -- complex construction ----------------------------------------------------

class NonManifoldEdge(InputError):
    """An edge is used by three or more face sides."""


class DanglingEdge(InputError):
    """An edge (or vertex) is not incident to any face."""


class PinchedVertex(InputError):
    """A vertex link is not a single circle or a single arc."""


class Disconnected(PreconditionError):
    """Operation requires a connected complex."""


class EmptyComplement(PreconditionError):
    """The complement of the subsurface has no faces."""


class PinchedSubsurface(InputError):
    """A face subset does not induce a surface with boundary."""


# -- PL functions ------------------------------------------------------------

class BoundaryNotLevel(InputError):
    """A boundary circle carries non-constant values."""


class CriticalOnBoundary(InputError):
    """Level structure branches at a boundary vertex."""


class DegenerateTie(InputError):
    """Two adjacent interior vertices share a value (or a face is constant)."""


class AmbiguousFoliation(InputError):
    """A face's cyclic value sequence is not unimodal, so its level-arc
    pairing is not canonical; the input needs refinement."""


class BoundaryVertexError(PreconditionError):
    """Vertex classification requested for a boundary vertex."""


class CriticalLevel(PreconditionError):
    """Slicing requested at a level carrying a critical vertex."""


# -- atlas / decomposition ---------------------------------------------------

class BandContainsOtherCritical(PreconditionError):
    """A band around one special value contains another one."""


class DiskComponentInN(PreconditionError):
    """Incompressibility test on a subsurface with a disk component."""


class SurfaceIsDisk(PreconditionError):
    """The canonical-neighborhood bookkeeping is vacuous on a 2-disk."""


class ChiNotNegative(PreconditionError):
    """The decomposition requires a surface of negative Euler characteristic."""


class NotFPreserving(PreconditionError):
    """The automorphism does not preserve the function values."""


# -- cellular automorphisms --------------------------------------------------

class InconsistentIncidence(InputError):
    """Cell partition incidence data does not close up (d . d != 0)."""


class NotChainMap(InputError):
    """A cell permutation is not compatible with the boundary operator."""


class NotAnAutomorphism(InputError):
    """Cell maps are not a valid automorphism of the complex."""


class PreconditionFailed(PreconditionError):
    """Generic precondition failure for the Lefschetz fixed-cell counting."""


class HypothesisFails(PreconditionError):
    """The hypotheses of the triviality-propagation step do not hold."""


class AlreadyOrientable(PreconditionError):
    """Orientation double cover requested for an orientable surface."""


class BoundaryNotInAnnuli(PreconditionError):
    """A boundary circle is not contained in an annulus element."""


class NecessaryConditionFailed(PreconditionError):
    """A machine-checked necessary condition contradicts the caller's
    homotopy assumption."""


# -- instance I/O ------------------------------------------------------------

class SchemaError(InputError):
    """Instance file violates the JSON schema; carries a field locus."""

    def __init__(self, message, locus=None):
        super().__init__(message if locus is None else f"{locus}: {message}")
        self.locus = locus


class UnsupportedKind(InputError):
    """Unknown generator kind."""
