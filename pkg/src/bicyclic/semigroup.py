"""The alpha-bicyclic monoid, its Bruck extension, boxes, and a word oracle.

Elements of the level-alpha monoid are pairs of ordinals below omega**alpha;
the product uses ordinal addition and left subtraction and makes every
element invertible in the inverse-semigroup sense, (a, b)^-1 = (b, a).

The Bruck extension wraps an arbitrary base semigroup: triples (n, s, m)
over non-negative integers with a three-case product, plus an optional
absorbing zero.  Passing the base product explicitly lets the construction
iterate: the base of one level is the extension of the one below.

``bicyclic_reduce`` gives an independent route into the level-1 monoid by
rewriting words over {p, q} with the relation pq = 1; tests use it as an
oracle for the pair product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from ._kernel import ord_cmp as _cmp
from ._kernel import pair_mul as _pair_mul
from .errors import LevelMismatch, OutOfRange, ParseError, ZeroHasNoBox
from .ordinal import Ordinal, OrdinalLike, ZERO, format_ordinal, parse_ordinal

__all__ = [
    "BAlphaElement",
    "BRUCK_ZERO",
    "BoxIndex",
    "BruckElement",
    "BruckZero",
    "balpha_inverse",
    "balpha_mul",
    "balpha_pow",
    "bicyclic_reduce",
    "box_of",
    "bruck_mul",
    "element",
    "format_balpha",
    "format_bruck",
    "identity",
    "parse_balpha",
    "parse_bruck",
]


@dataclass(frozen=True)
class BAlphaElement:
    """A pair of ordinals below omega**level."""

    level: Ordinal
    left: Ordinal
    right: Ordinal

    def __post_init__(self):
        bound = self.level._rep
        for coord in (self.left, self.right):
            rep = coord._rep
            if rep and _cmp(rep[0][0], bound) >= 0:
                raise OutOfRange(f"{coord} >= omega^{self.level}")

    def __str__(self) -> str:
        return format_balpha(self)


def element(level: OrdinalLike, left: OrdinalLike, right: OrdinalLike) -> BAlphaElement:
    """Coercing constructor: level and coordinates accept ints and text."""
    return BAlphaElement(Ordinal(level), Ordinal(left), Ordinal(right))


def identity(level: OrdinalLike) -> BAlphaElement:
    return BAlphaElement(Ordinal(level), ZERO, ZERO)


def _check_levels(x: BAlphaElement, y: BAlphaElement) -> None:
    if x.level._rep != y.level._rep:
        raise LevelMismatch(f"levels {x.level} and {y.level} differ")


def balpha_mul(x: BAlphaElement, y: BAlphaElement) -> BAlphaElement:
    """(a,b)·(c,d) = (a+(c-b), d) when b <= c, else (a, d+(b-c))."""
    _check_levels(x, y)
    left, right = _pair_mul(x.left._rep, x.right._rep, y.left._rep, y.right._rep)
    out = object.__new__(BAlphaElement)
    object.__setattr__(out, "level", x.level)
    object.__setattr__(out, "left", Ordinal._wrap(left))
    object.__setattr__(out, "right", Ordinal._wrap(right))
    return out


def balpha_inverse(x: BAlphaElement) -> BAlphaElement:
    """(a, b) -> (b, a); satisfies x·x^-1·x == x under the pair product."""
    return BAlphaElement(x.level, x.right, x.left)


def balpha_pow(x: BAlphaElement, k: int) -> BAlphaElement:
    """k-fold product of x with itself; k == 0 gives the identity."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    out = identity(x.level)
    for _ in range(k):
        out = balpha_mul(out, x)
    return out


def bicyclic_reduce(word: str) -> BAlphaElement:
    """Reduce a word over {p, q} by deleting "pq" pairs; return the level-1 pair.

    Deletion is leftmost-first, but the rewriting system is confluent, so the
    order does not matter (asserted over short words in the test suite).  The
    irreducible word has the shape q^a p^b and maps to the element (a, b).
    """
    for pos, ch in enumerate(word):
        if ch not in "pq":
            raise ParseError(f"expected 'p' or 'q', got {ch!r}", pos)
    while True:
        cut = word.find("pq")
        if cut < 0:
            break
        word = word[:cut] + word[cut + 2:]
    a = len(word) - len(word.lstrip("q"))
    b = len(word) - a
    assert word == "q" * a + "p" * b
    return element(1, a, b)


# --- Bruck extension -------------------------------------------------------


@dataclass(frozen=True)
class BruckZero:
    """The adjoined absorbing zero."""

    def __str__(self) -> str:
        return "0*"


BRUCK_ZERO = BruckZero()


@dataclass(frozen=True)
class BruckElement:
    """A triple (n, payload, m) over a base semigroup."""

    n: int
    payload: object
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("box coordinates must be non-negative")

    def __str__(self) -> str:
        return format_bruck(self)


BruckValue = Union[BruckElement, BruckZero]


def bruck_mul(x: BruckValue, y: BruckValue, base_mul: Callable) -> BruckValue:
    """Three-case product; any zero operand is absorbing."""
    if isinstance(x, BruckZero) or isinstance(y, BruckZero):
        return BRUCK_ZERO
    b, c = x.m, y.n
    if b < c:
        return BruckElement(x.n + c - b, y.payload, y.m)
    if b > c:
        return BruckElement(x.n, x.payload, y.m + b - c)
    return BruckElement(x.n, base_mul(x.payload, y.payload), y.m)


class BoxIndex(NamedTuple):
    """Index [n, m] of the box {(n, s, m)} inside a Bruck extension."""

    n: int
    m: int

    def __str__(self) -> str:
        return f"[{self.n}, {self.m}]"


def box_of(x: BruckValue) -> BoxIndex:
    if isinstance(x, BruckZero):
        raise ZeroHasNoBox("the adjoined zero lies in no box")
    return BoxIndex(x.n, x.m)


# --- text forms ------------------------------------------------------------


def _split_top_level(body: str, offset: int) -> list:
    """Split on commas that are not nested inside parentheses or brackets."""
    parts = []
    depth = 0
    start = 0
    for k, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced closing bracket", offset + k)
        elif ch == "," and depth == 0:
            parts.append((body[start:k], offset + start))
            start = k + 1
    if depth != 0:
        raise ParseError("unbalanced opening bracket", offset + len(body))
    parts.append((body[start:], offset + start))
    return parts


def format_balpha(x: BAlphaElement) -> str:
    return f"({format_ordinal(x.left)}, {format_ordinal(x.right)})"


def parse_balpha(text: str, level: OrdinalLike) -> BAlphaElement:
    """Parse "(EXPR, EXPR)" into an element of the given level."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("expected '(EXPR, EXPR)'", 0)
    inner_offset = text.index("(") + 1
    parts = _split_top_level(s[1:-1], inner_offset)
    if len(parts) != 2:
        raise ParseError("expected exactly one top-level comma", inner_offset)
    (left_text, _), (right_text, _) = parts
    return element(level, parse_ordinal(left_text), parse_ordinal(right_text))


def format_bruck(x: BruckValue) -> str:
    if isinstance(x, BruckZero):
        return "0*"
    payload = x.payload
    body = format_balpha(payload) if isinstance(payload, BAlphaElement) else str(payload)
    return f"[{x.n}, {body}, {x.m}]"


def parse_bruck(text: str, payload_level: OrdinalLike) -> BruckValue:
    """Parse "[n, (EXPR, EXPR), m]" or "0*"; payloads are pair elements."""
    s = text.strip()
    if s == "0*":
        return BRUCK_ZERO
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("expected '[n, (EXPR, EXPR), m]' or '0*'", 0)
    inner_offset = text.index("[") + 1
    parts = _split_top_level(s[1:-1], inner_offset)
    if len(parts) != 3:
        raise ParseError("expected '[n, (EXPR, EXPR), m]'", inner_offset)
    (n_text, n_pos), (pair_text, _), (m_text, m_pos) = parts
    try:
        n = int(n_text.strip())
        m = int(m_text.strip())
    except ValueError:
        raise ParseError("box coordinates must be integers", n_pos) from None
    if n < 0 or m < 0:
        raise ParseError("box coordinates must be non-negative", m_pos)
    return BruckElement(n, parse_balpha(pair_text, payload_level), m)
