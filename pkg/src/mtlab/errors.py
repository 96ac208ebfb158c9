"""Exception hierarchy.

Validation errors mean the input is not the structure it claims to be.
Hypothesis errors mean a theorem's premise fails, which sweeps count as
vacuous rather than false.
"""

from __future__ import annotations

from typing import Any


class MTLabError(Exception):
    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class ValidationError(MTLabError):
    pass


class DuplicateLabel(ValidationError):
    pass


class NotAntisymmetric(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class NotDistributive(ValidationError):
    pass


class NotBooleanAlgebra(ValidationError):
    pass


class KuratowskiViolation(ValidationError):
    pass


class NotATopology(ValidationError):
    pass


class NotBooleanHom(ValidationError):
    pass


class NotMTMorphism(ValidationError):
    pass


class NotFrameHom(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message: str, location: str = "", witness: Any = None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message, witness)
        self.location = location


class SizeGuardExceeded(MTLabError):
    pass


class HypothesisNotMet(MTLabError):
    pass


class NotSober(HypothesisNotMet):
    pass


class BijectionFailure(MTLabError):
    """A construction the theory guarantees came out wrong; always a bug."""


class OracleDisagreement(MTLabError):
    """Brute-force oracle and fast path disagree; always a bug."""
