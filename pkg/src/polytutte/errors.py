"""Exception hierarchy shared by all polytutte modules.

Every exception carries a stable machine-readable ``category`` string (the
class name) so the CLI can report errors uniformly and map them to distinct
exit codes:

  InputError          bad files, unparseable polynomials, unknown JSON shapes
  ValidationError     mathematically invalid objects (axiom violations etc.)
  SizeLimitExceeded   an enumeration exceeded its configured bound
"""

from __future__ import annotations


class PolytutteError(Exception):
    """Base class; ``category`` identifies the error kind for machine use."""

    @property
    def category(self) -> str:
        return type(self).__name__


class InputError(PolytutteError):
    """Malformed input: JSON shape, polynomial text, CLI arguments."""


class ParseError(InputError):
    """A polynomial or structured file could not be parsed."""


class ValidationError(PolytutteError):
    """An object violates one of its defining axioms."""


class EmptyBasisSet(ValidationError):
    """A polymatroid must contain at least one basis vector."""


class UnequalSums(ValidationError):
    """Two candidate bases have different coordinate sums."""

    def __init__(self, a, b):
        super().__init__(f"coordinate sums differ: {a} vs {b}")
        self.a, self.b = a, b


class ExchangeFailure(ValidationError):
    """The basis exchange axiom fails for a pair of vectors at an index."""

    def __init__(self, a, b, i):
        super().__init__(f"no exchange for {a}, {b} at index {i}")
        self.a, self.b, self.i = a, b, i


class NonzeroEmptySet(ValidationError):
    """A rank table must assign 0 to the empty set."""


class SubmodularityFailure(ValidationError):
    """f(I) + f(J) < f(I | J) + f(I & J) for the witness masks I, J."""

    def __init__(self, i_mask, j_mask):
        super().__init__(f"submodularity fails for masks {i_mask}, {j_mask}")
        self.i_mask, self.j_mask = i_mask, j_mask


class NotABasis(ValidationError):
    """The supplied vector is not a basis of the polymatroid."""


class EmptySlice(ValidationError):
    """Requested slice level lies outside the attained coordinate range."""


class OutOfRange(ValidationError):
    """A slice-rank level is outside the valid interval for that element."""


class OverlappingSets(ValidationError):
    """Minor construction requires disjoint deletion/contraction sets."""


class FullGroundSet(ValidationError):
    """Deleting or contracting the whole ground set is not allowed."""


class GroundSetTooLarge(ValidationError):
    """Ground set exceeds the configured maximum (bitmask representation)."""


class NotAMatroid(ValidationError):
    """Rank table is not a matroid rank function (unit increments etc.)."""


class NegativeCoordinates(ValidationError):
    """Operation requires all basis coordinates to be nonnegative."""


class DegreeExceedsN(ValidationError):
    """Internal assertion: a Tutte polynomial had degree above |ground set|."""


class ReversalRange(ValidationError):
    """Polynomial reversal requested with an exponent bound that is too small."""


class SizeLimitExceeded(PolytutteError):
    """An enumeration produced more objects than the configured cap."""

    def __init__(self, limit):
        super().__init__(f"enumeration exceeded the cap of {limit} bases")
        self.limit = limit
