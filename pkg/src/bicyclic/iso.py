"""The level-shift isomorphism between pair elements and Bruck triples.

An element of the level-(alpha+1) monoid splits each coordinate around
omega**alpha into an integer head and a tail below omega**alpha; the heads
become the box coordinates of a Bruck triple whose payload is the pair of
tails at level alpha.  The map is a bijection and a homomorphism, and a
product of two elements falls into one of four branches indexed by how the
inner box coordinates compare; ``classify_case`` exposes that split so
samplers can stratify over it.
"""

from __future__ import annotations

from enum import Enum

from .errors import LevelMismatch, OutOfRange, ZeroNotInImage
from .ordinal import ONE, Ordinal, OrdinalLike, modified_split, omega_pow
from .semigroup import BAlphaElement, BruckElement, BruckZero

__all__ = ["CaseTag", "classify_case", "from_bruck", "to_bruck"]


class CaseTag(Enum):
    """Which branch of the product the pair (x, y) exercises."""

    LeftDominates = "LeftDominates"
    RightDominates = "RightDominates"
    EqualHeadsTailGreater = "EqualHeadsTailGreater"
    EqualHeadsTailLeq = "EqualHeadsTailLeq"


def _check_level(alpha: Ordinal, x: BAlphaElement) -> None:
    if x.level != alpha + ONE:
        raise LevelMismatch(f"element level {x.level} is not {alpha} + 1")


def to_bruck(alpha: OrdinalLike, x: BAlphaElement) -> BruckElement:
    """Split both coordinates of a level-(alpha+1) element around omega**alpha."""
    alpha = Ordinal(alpha)
    _check_level(alpha, x)
    n, a_tail = modified_split(x.left, alpha)
    m, b_tail = modified_split(x.right, alpha)
    return BruckElement(n, BAlphaElement(alpha, a_tail, b_tail), m)


def from_bruck(alpha: OrdinalLike, y: BruckElement) -> BAlphaElement:
    """Inverse of ``to_bruck``; rejects the adjoined zero and oversized payloads."""
    alpha = Ordinal(alpha)
    if isinstance(y, BruckZero):
        raise ZeroNotInImage("the adjoined zero is not a pair element")
    payload = y.payload
    if not isinstance(payload, BAlphaElement):
        raise TypeError("payload must be a pair element")
    if payload.level != alpha:
        raise LevelMismatch(f"payload level {payload.level} is not {alpha}")
    power = omega_pow(alpha)
    if payload.left >= power or payload.right >= power:
        raise OutOfRange("payload coordinates must lie below omega^alpha")
    head = Ordinal._wrap(((alpha._rep, y.n),) if y.n else ())
    head_m = Ordinal._wrap(((alpha._rep, y.m),) if y.m else ())
    return BAlphaElement(alpha + ONE, head + payload.left, head_m + payload.right)


def classify_case(x: BAlphaElement, y: BAlphaElement, alpha: OrdinalLike) -> CaseTag:
    """Tag the product branch taken when composing x·y through the triples."""
    alpha = Ordinal(alpha)
    _check_level(alpha, x)
    _check_level(alpha, y)
    m1, b_tail = modified_split(x.right, alpha)
    k1, c_tail = modified_split(y.left, alpha)
    if k1 > m1:
        return CaseTag.LeftDominates
    if k1 < m1:
        return CaseTag.RightDominates
    if c_tail > b_tail:
        return CaseTag.EqualHeadsTailGreater
    return CaseTag.EqualHeadsTailLeq
