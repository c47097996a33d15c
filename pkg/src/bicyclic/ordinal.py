"""Exact ordinal arithmetic in hereditary normal form, plus a text grammar.

An ordinal is stored as a strictly decreasing sequence of (exponent,
coefficient) terms whose exponents are themselves ordinals, so every value
below epsilon_0 has exactly one representation and equality is structural.
All values are immutable and hashable; addition and left subtraction are
exact.

Text grammar (ASCII, whitespace-insensitive)::

    expr := term ("+" term)*
    term := "w" ["^" exp] ["*" nat] | nat
    exp  := nat | "(" expr ")"
    nat  := digit+

``parse_ordinal`` accepts non-canonical sums such as "1 + w" and normalizes
them by folding ordinal addition left to right; ``format_ordinal`` emits the
canonical spelling, so parse(format(x)) == x for every x.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Optional, Tuple, Union

from ._kernel import coeff_at as _coeff_at
from ._kernel import ord_add as _add
from ._kernel import ord_cmp as _cmp
from ._kernel import ord_sub as _sub
from .errors import OutOfRange, ParseError, SubtrahendTooLarge, ZeroOrdinal

__all__ = [
    "OMEGA",
    "ONE",
    "ZERO",
    "ModifiedSplit",
    "Ordinal",
    "compare",
    "decrement_last",
    "enumerate_below_omega_pow",
    "format_ordinal",
    "is_canonical",
    "last_term",
    "modified_split",
    "omega_pow",
    "parse_ordinal",
]

_REP_ZERO: tuple = ()
_REP_ONE = (((), 1),)

OrdinalLike = Union["Ordinal", int, str]


class Ordinal:
    """An ordinal below epsilon_0 in hereditary normal form."""

    __slots__ = ("_rep",)

    def __init__(self, value: OrdinalLike = 0):
        if isinstance(value, Ordinal):
            self._rep = value._rep
        elif isinstance(value, int):
            if value < 0:
                raise ValueError("ordinals are non-negative")
            self._rep = (((), value),) if value else _REP_ZERO
        elif isinstance(value, str):
            self._rep = parse_ordinal(value)._rep
        else:
            raise TypeError(f"cannot build an Ordinal from {type(value).__name__}")

    @classmethod
    def _wrap(cls, rep: tuple) -> "Ordinal":
        o = object.__new__(cls)
        o._rep = rep
        return o

    @property
    def terms(self) -> Tuple[Tuple["Ordinal", int], ...]:
        """The (exponent, coefficient) terms, leading term first."""
        return tuple((Ordinal._wrap(e), c) for e, c in self._rep)

    @property
    def is_finite(self) -> bool:
        r = self._rep
        return not r or (len(r) == 1 and r[0][0] == ())

    def __int__(self) -> int:
        r = self._rep
        if not r:
            return 0
        if len(r) == 1 and r[0][0] == ():
            return r[0][1]
        raise OverflowError(f"{self} is not a finite ordinal")

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._rep == other._rep

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other: OrdinalLike) -> bool:
        return self._compare(other) < 0

    def __le__(self, other: OrdinalLike) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other: OrdinalLike) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other: OrdinalLike) -> bool:
        return self._compare(other) >= 0

    def _compare(self, other: OrdinalLike) -> int:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            raise TypeError(f"cannot compare Ordinal with {type(other).__name__}")
        return _cmp(self._rep, other._rep)

    def __hash__(self) -> int:
        return hash(self._rep)

    def __add__(self, other: OrdinalLike) -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return Ordinal._wrap(_add(self._rep, other._rep))

    def __radd__(self, other: OrdinalLike) -> "Ordinal":
        return Ordinal(other).__add__(self)

    def __sub__(self, other: OrdinalLike) -> "Ordinal":
        """Left subtraction: the unique c with other + c == self."""
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        diff = _sub(self._rep, other._rep)
        if diff is None:
            raise SubtrahendTooLarge(f"{other} > {self}")
        return Ordinal._wrap(diff)

    def coeff_at(self, exponent: OrdinalLike) -> int:
        """Coefficient of the term with the given exponent, or 0."""
        return _coeff_at(self._rep, Ordinal(exponent)._rep)

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f'Ordinal("{format_ordinal(self)}")'


ZERO = Ordinal(0)
ONE = Ordinal(1)
OMEGA = Ordinal._wrap(((_REP_ONE, 1),))


def compare(x: Ordinal, y: Ordinal) -> int:
    """Three-way order comparison: -1 when x < y, 0 when equal, 1 when x > y."""
    return _cmp(Ordinal(x)._rep, Ordinal(y)._rep)


def omega_pow(e: OrdinalLike) -> Ordinal:
    """The ordinal omega**e; omega_pow(0) == 1."""
    return Ordinal._wrap(((Ordinal(e)._rep, 1),))


class ModifiedSplit(NamedTuple):
    """x written as head_coeff * omega**alpha + tail with tail < omega**alpha."""

    head_coeff: int
    tail: Ordinal


def modified_split(x: Ordinal, alpha: OrdinalLike) -> ModifiedSplit:
    """Split x < omega**(alpha+1) around the power omega**alpha.

    The head coefficient may be 0 (when x < omega**alpha the tail is x
    itself).  Raises OutOfRange when x >= omega**(alpha+1).
    """
    alpha = Ordinal(alpha)
    rep = x._rep
    if not rep:
        return ModifiedSplit(0, ZERO)
    lead = _cmp(rep[0][0], alpha._rep)
    if lead > 0:
        raise OutOfRange(f"{x} >= omega^({alpha} + 1)")
    if lead == 0:
        return ModifiedSplit(rep[0][1], Ordinal._wrap(rep[1:]))
    return ModifiedSplit(0, x)


def last_term(x: Ordinal) -> Optional[Tuple[Ordinal, int]]:
    """Final (exponent, coefficient) term of x, or None when x == 0."""
    rep = x._rep
    if not rep:
        return None
    e, c = rep[-1]
    return Ordinal._wrap(e), c


def decrement_last(x: Ordinal) -> Ordinal:
    """x with its last coefficient lowered by one (term dropped at zero)."""
    rep = x._rep
    if not rep:
        raise ZeroOrdinal("cannot decrement 0")
    e, c = rep[-1]
    if c > 1:
        return Ordinal._wrap(rep[:-1] + ((e, c - 1),))
    return Ordinal._wrap(rep[:-1])


def is_canonical(x: Ordinal) -> bool:
    """Structural validity check used by closure tests."""
    return _rep_ok(x._rep)


def _rep_ok(rep: object) -> bool:
    if not isinstance(rep, tuple):
        return False
    prev = None
    for item in rep:
        if not isinstance(item, tuple) or len(item) != 2:
            return False
        e, c = item
        if not isinstance(c, int) or c < 1 or not _rep_ok(e):
            return False
        if prev is not None and _cmp(prev, e) <= 0:
            return False
        prev = e
    return True


def enumerate_below_omega_pow(j: int, bound: int) -> Iterator[Ordinal]:
    """All ordinals below omega**j with every coefficient <= bound, ascending.

    Yields (bound+1)**j values; used by the truncation-exhaustive checks.
    """
    if j < 0 or bound < 0:
        raise ValueError("j and bound must be non-negative")
    exps = [Ordinal(k)._rep for k in range(j - 1, -1, -1)]
    for coeffs in itertools.product(range(bound + 1), repeat=j):
        yield Ordinal._wrap(tuple((e, c) for e, c in zip(exps, coeffs) if c))


# --- text grammar ---------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        t = self.text
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected a number")
        return int(t[start:self.pos])

    def expr(self) -> Ordinal:
        value = self.term()
        while self.take("+"):
            value = value + self.term()
        return value

    def term(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return Ordinal(self.nat())
        if ch == "w":
            self.pos += 1
            exponent = ONE
            if self.take("^"):
                exponent = self.exponent()
            coefficient = 1
            if self.take("*"):
                coefficient = self.nat()
            if coefficient == 0:
                return ZERO
            return Ordinal._wrap(((exponent._rep, coefficient),))
        raise self.fail("expected 'w' or a number")

    def exponent(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return Ordinal(self.nat())
        if self.take("("):
            value = self.expr()
            if not self.take(")"):
                raise self.fail("expected ')'")
            return value
        raise self.fail("expected a number or '('")


def parse_ordinal(text: str) -> Ordinal:
    """Parse the grammar above, normalizing non-canonical sums."""
    p = _Parser(text)
    value = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        raise p.fail("unexpected trailing input")
    return value


def format_ordinal(x: Ordinal) -> str:
    """Canonical text: decreasing terms joined by " + "; zero prints "0"."""
    rep = x._rep
    if not rep:
        return "0"
    parts = []
    for e, c in rep:
        if not e:
            parts.append(str(c))
            continue
        if e == _REP_ONE:
            s = "w"
        else:
            exponent = Ordinal._wrap(e)
            if exponent.is_finite:
                s = f"w^{int(exponent)}"
            else:
                s = f"w^({format_ordinal(exponent)})"
        if c != 1:
            s = f"{s}*{c}"
        parts.append(s)
    return " + ".join(parts)
