"""Exception types shared across the library.

Domain errors all derive from SelError so the CLI can map them to exit
code 1; genuinely broken inputs (wrong types, malformed text) raise the
usual builtins or ParseError.
"""


class SelError(Exception):
    """Base class for domain errors."""


class FieldMismatchError(SelError):
    """Operands belong to different fields (e.g. F_7 vs F_11, or F_p vs Q)."""


class UnsupportedOrderError(SelError):
    """The field does not contain the required roots of unity (or radicals)."""


class CharacteristicTooSmallError(SelError):
    """An operation divides by a factorial that vanishes in this prime field."""


class RankOutOfRangeError(SelError):
    """Transvection rank is negative or exceeds a declared degree."""


class DegreeError(SelError):
    """A polynomial or form has the wrong degree for the operation."""


class ParseError(SelError):
    """Syntax error in polynomial text.  Carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ZeroConstantTermError(SelError):
    """Normal form requires f(0) != 0; shift a root away from 0 first."""


class WildRamificationError(SelError):
    """p divides the level n: wild ramification is out of scope."""


class ShapeMismatchError(SelError):
    """Two normal forms with different (n, s, delta) cannot be compared."""


class InadmissibleParamsError(SelError):
    """Parameters violate a signature row's side conditions."""


class BadParameterCountError(SelError):
    """An equation builder received the wrong number of parameters."""


class DegenerateLambdaError(SelError):
    """Equation-family parameters collide or make the polynomial inseparable."""


class WrongGenusError(SelError):
    """Operation restricted to a specific genus (form degree)."""


class NotOnLocusError(SelError):
    """The form does not satisfy the vanishing condition the block assumes."""


class NotGenus3Error(SelError):
    """classify3 input is not a genus-3 hyperelliptic curve."""


class NormalizationObstructionError(SelError):
    """A required radical is missing, so no normal form exists over this field."""
