"""Locally compact shift-continuous topologies on the level-alpha monoid.

A topology in the family is selected by ``TopologySpec(i, alpha)`` with
1 <= i <= alpha <= omega.  A point (a, b) is a limit point exactly when both
coordinates are nonzero, their final terms carry the same exponent j, and
1 <= j < i; every other point is isolated.  At i = 1 the topology is
discrete, and raising i refines nothing: the family is strictly decreasing
in i under inclusion.

Basic open sets are described finitely and decidably:

* ``Singleton(center)`` is the open point set of an isolated point.
* ``BaseNbhd(center, j, n)`` describes a punctured basic neighborhood of a
  limit point (a, b) of level j: writing a- and b- for the coordinates with
  the final coefficient lowered by one, the members besides the center are
  the pairs (a- + g, b- + d) with g, d < omega**j where the coefficient of
  omega**(j-1) in g or in d exceeds the threshold n.  Both coordinates of a
  member are therefore strictly below the corresponding center coordinate,
  and membership reduces to two interval checks plus two coefficient probes.

The thresholded filtration is cofinal with any family that shrinks boxes
away one index at a time, so the generated topology does not depend on the
exact threshold convention; what it buys is exactness: the boxes missed by
``BaseNbhd((w^j, w^j), j, n)`` form precisely the square of box indices
{(p, q) : p <= n, q <= n} (see ``uncovered_boxes``).

``transport``/``transport_inv`` move neighborhoods between a limit point and
the corner point (w^j, w^j) by one two-sided shift each way, and the head
coefficients transform additively under such shifts.  That linearity is what
makes ``continuity_witness`` purely symbolic: it conjugates the requested
shift into corner coordinates, reads off five head constants, and scans for
the least threshold whose finite head-space check passes; a proven bound on
the search range guarantees termination.  ``verify_shift_inclusion`` is the
independent check: it enumerates actual members up to a truncation bound,
multiplies them out, and tests membership of every image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from ._kernel import coeff_at as _coeff_at
from ._kernel import ord_cmp as _cmp
from ._kernel import ord_sub as _sub
from ._kernel import pair_mul as _pair_mul
from .errors import (
    EqualPoints,
    InvalidDescriptor,
    LevelMismatch,
    NotALimitLevel,
    ParseError,
    TargetMismatch,
    UndefinedForZeroCoordinate,
    UnsupportedLevel,
    WitnessNotFound,
)
from .ordinal import (
    OMEGA,
    ONE,
    Ordinal,
    OrdinalLike,
    ZERO,
    decrement_last,
    enumerate_below_omega_pow,
    format_ordinal,
    last_term,
    omega_pow,
)
from .semigroup import BAlphaElement, balpha_mul, format_balpha, parse_balpha

__all__ = [
    "BaseNbhd",
    "BoxSquare",
    "FinerResult",
    "InclusionResult",
    "Isolated",
    "Limit",
    "NbhdDescriptor",
    "PointClass",
    "Singleton",
    "TopologySpec",
    "base_nbhd",
    "classify_point",
    "continuity_witness",
    "enumerate_topologies",
    "format_descriptor",
    "forced_nbhd_contains",
    "hausdorff_witness",
    "iter_members",
    "nbhd_contains",
    "parse_descriptor",
    "topology_finer",
    "transport",
    "transport_inv",
    "uncovered_boxes",
    "verify_shift_inclusion",
]


@dataclass(frozen=True)
class TopologySpec:
    """Selector (i, alpha) for one topology of the family, 1 <= i <= alpha <= omega."""

    i: Ordinal
    alpha: Ordinal

    def __post_init__(self):
        if self.alpha > OMEGA:
            raise UnsupportedLevel(f"alpha must be at most omega, got {self.alpha}")
        if self.i < ONE or self.i > self.alpha:
            raise UnsupportedLevel(f"index i must satisfy 1 <= i <= {self.alpha}, got {self.i}")

    def __str__(self) -> str:
        return f"topo(i={format_ordinal(self.i)}, alpha={format_ordinal(self.alpha)})"


def spec(i: OrdinalLike, alpha: OrdinalLike) -> TopologySpec:
    """Coercing constructor for TopologySpec."""
    return TopologySpec(Ordinal(i), Ordinal(alpha))


@dataclass(frozen=True)
class Isolated:
    def __str__(self) -> str:
        return "isolated"


@dataclass(frozen=True)
class Limit:
    level: int

    def __str__(self) -> str:
        return f"limit j={self.level}"


PointClass = Union[Isolated, Limit]


@dataclass(frozen=True)
class Singleton:
    """Descriptor of the open singleton at an isolated point."""

    center: BAlphaElement


@dataclass(frozen=True)
class BaseNbhd:
    """Descriptor of a punctured basic neighborhood at a limit point.

    The validity requirement is intrinsic (both center coordinates end in
    exponent j); whether the set is open additionally needs j < i in the
    chosen topology, which construction through ``base_nbhd`` guarantees.
    """

    center: BAlphaElement
    j: int
    n: int

    def __post_init__(self):
        if self.j < 1:
            raise InvalidDescriptor("the neighborhood level j must be positive")
        if self.n < 0:
            raise InvalidDescriptor("the threshold must be non-negative")
        for coord in (self.center.left, self.center.right):
            t = last_term(coord)
            if t is None or t[0] != self.j:
                raise InvalidDescriptor(
                    f"coordinate {coord} does not end in exponent {self.j}"
                )


NbhdDescriptor = Union[Singleton, BaseNbhd]


def _check_level(spec_or_level, x: BAlphaElement) -> None:
    level = spec_or_level.alpha if isinstance(spec_or_level, TopologySpec) else spec_or_level
    if x.level != level:
        raise LevelMismatch(f"element level {x.level} is not {level}")


def classify_point(spec: TopologySpec, x: BAlphaElement) -> PointClass:
    """Limit(j) when both final exponents equal j with 1 <= j < i, else Isolated.

    Points with a zero coordinate have no final term on that side and are
    isolated; so is every point when i == 1 (the discrete member of the
    family).
    """
    _check_level(spec, x)
    lt = last_term(x.left)
    rt = last_term(x.right)
    if lt is None or rt is None:
        return Isolated()
    je = lt[0]
    if je != rt[0] or not je:
        return Isolated()
    if je < spec.i:
        return Limit(int(je))
    return Isolated()


def base_nbhd(spec: TopologySpec, p: BAlphaElement, n: int) -> NbhdDescriptor:
    """The n-th basic neighborhood descriptor at p (a singleton when isolated)."""
    cls = classify_point(spec, p)
    if isinstance(cls, Isolated):
        return Singleton(p)
    return BaseNbhd(p, cls.level, n)


class _BaseParts(NamedTuple):
    a: tuple
    b: tuple
    a_dec: tuple
    b_dec: tuple
    exp_rep: tuple  # omega**(j-1) exponent, as a rep
    n: int


def _base_parts(d: BaseNbhd) -> _BaseParts:
    a = d.center.left
    b = d.center.right
    return _BaseParts(
        a._rep,
        b._rep,
        decrement_last(a)._rep,
        decrement_last(b)._rep,
        Ordinal(d.j - 1)._rep,
        d.n,
    )


def _parts_contain(parts: _BaseParts, qa: tuple, qb: tuple) -> bool:
    if qa == parts.a and qb == parts.b:
        return True
    if _cmp(qa, parts.a_dec) < 0 or _cmp(qa, parts.a) >= 0:
        return False
    if _cmp(qb, parts.b_dec) < 0 or _cmp(qb, parts.b) >= 0:
        return False
    if _coeff_at(_sub(qa, parts.a_dec), parts.exp_rep) > parts.n:
        return True
    return _coeff_at(_sub(qb, parts.b_dec), parts.exp_rep) > parts.n


def nbhd_contains(d: NbhdDescriptor, q: BAlphaElement) -> bool:
    """Decide membership of q in the described basic open set."""
    center = d.center
    _check_level(center.level, q)
    if isinstance(d, Singleton):
        return q == center
    return _parts_contain(_base_parts(d), q.left._rep, q.right._rep)


def forced_nbhd_contains(p: BAlphaElement, q: BAlphaElement) -> bool:
    """Membership in the neighborhood forced at p by shift continuity alone.

    Any topology making both shifts continuous must let the set
    {p} ∪ [a-, a) x [b-, b) be a neighborhood of p = (a, b); here the two
    final exponents of p may differ.  Undefined when a coordinate is 0.
    """
    _check_level(p.level, q)
    if not p.left or not p.right:
        raise UndefinedForZeroCoordinate(f"{format_balpha(p)} has a zero coordinate")
    if q == p:
        return True
    a_dec = decrement_last(p.left)
    b_dec = decrement_last(p.right)
    return a_dec <= q.left < p.left and b_dec <= q.right < p.right


def transport(p: BAlphaElement, x: BAlphaElement) -> BAlphaElement:
    """Shift x into the chart at p: (a-, 0)·x·(0, b-).

    Maps the corner (w^{n_m}, w^{k_t}) of the final exponents of p onto p and
    carries the corner's basic neighborhoods onto those of p.
    """
    if not p.left or not p.right:
        raise UndefinedForZeroCoordinate(f"{format_balpha(p)} has a zero coordinate")
    _check_level(p.level, x)
    left_factor = BAlphaElement(p.level, decrement_last(p.left), ZERO)
    right_factor = BAlphaElement(p.level, ZERO, decrement_last(p.right))
    return balpha_mul(balpha_mul(left_factor, x), right_factor)


def transport_inv(p: BAlphaElement, x: BAlphaElement) -> BAlphaElement:
    """Inverse chart map (0, a-)·x·(b-, 0); undoes ``transport`` on its chart."""
    if not p.left or not p.right:
        raise UndefinedForZeroCoordinate(f"{format_balpha(p)} has a zero coordinate")
    _check_level(p.level, x)
    left_factor = BAlphaElement(p.level, ZERO, decrement_last(p.left))
    right_factor = BAlphaElement(p.level, decrement_last(p.right), ZERO)
    return balpha_mul(balpha_mul(left_factor, x), right_factor)


# --- continuity witnesses ---------------------------------------------------


def _works(np: int, j: int, lam: int, big_lam: int, l2_tail_pos: bool,
           rho: int, rho_star: int, nt: int) -> bool:
    """Exhaustive head-space check that threshold np is a valid witness.

    Members are abstracted to their pair of omega**(j-1) head coefficients
    (g, d); the four image families produced by the conjugated shift have
    head values affine in (g, d), so validity only depends on this finite
    grid.  Branch reachability at boundary heads depends on whether residuals
    below omega**(j-1) exist: at j == 1 they do not, otherwise the ambiguous
    boundaries are included conservatively (a superset of real members keeps
    the check sound; it can only raise the returned threshold).
    """
    grid = big_lam + rho + nt + np + 2
    small_side_max = big_lam if l2_tail_pos else big_lam - 1
    for g in range(grid + 1):
        for d in range(grid + 1):
            if g <= np and d <= np:
                continue
            if g >= big_lam:
                if d <= rho:
                    if not (rho_star > nt or lam + (g - big_lam) + (rho - d) > nt):
                        return False
                if d > rho or (d == rho and j >= 2):
                    if not (lam + (g - big_lam) > nt or rho_star + (d - rho) > nt):
                        return False
            if g <= small_side_max:
                u = d + (big_lam - g)
                if u <= rho:
                    if not (rho_star > nt or lam + (rho - u) > nt):
                        return False
                if u > rho or (u == rho and j >= 2):
                    if not (lam > nt or rho_star + (u - rho) > nt):
                        return False
    return True


def continuity_witness(
    spec: TopologySpec,
    l: BAlphaElement,
    r: BAlphaElement,
    x: BAlphaElement,
    target: NbhdDescriptor,
) -> NbhdDescriptor:
    """A descriptor V around x with l·V·r contained in the target around l·x·r.

    For an isolated x the singleton suffices.  For a limit x of level j the
    shift is conjugated into corner coordinates, L = l·(a-, 0) and
    R = (0, b-)·r; when either inner coordinate reaches omega**j the whole
    neighborhood collapses onto the single image point and threshold 0 works,
    otherwise the image fills a basic neighborhood of l·x·r at the same level
    and the least sufficient threshold is found by the head-space check.  The
    search range ``big_lam + rho + nt`` is itself sufficient, so the scan
    always terminates with a valid witness on well-formed inputs.
    """
    for e in (l, r, x):
        _check_level(spec, e)
    y = balpha_mul(balpha_mul(l, x), r)
    if target.center != y:
        raise TargetMismatch(
            f"target centred at {format_balpha(target.center)}, "
            f"but l·x·r = {format_balpha(y)}"
        )
    cls = classify_point(spec, x)
    if isinstance(cls, Isolated):
        return Singleton(x)
    j = cls.level
    wj = omega_pow(j)._rep
    left_factor = BAlphaElement(spec.alpha, decrement_last(x.left), ZERO)
    right_factor = BAlphaElement(spec.alpha, ZERO, decrement_last(x.right))
    big_l = balpha_mul(l, left_factor)
    big_r = balpha_mul(right_factor, r)
    l2 = big_l.right._rep
    r1 = big_r.left._rep
    if _cmp(l2, wj) >= 0 or _cmp(r1, wj) >= 0:
        return BaseNbhd(x, j, 0)
    if isinstance(target, Singleton):
        # non-collapsing shifts have infinite image; a singleton around a
        # non-isolated center is not a neighborhood and admits no witness
        raise WitnessNotFound(
            f"{format_balpha(y)} is not isolated; no neighborhood of "
            f"{format_balpha(x)} maps into a singleton"
        )
    assert target.j == j, "a base target around l·x·r always carries the level of x"
    exp_rep = Ordinal(j - 1)._rep
    lam = _coeff_at(big_l.left._rep, exp_rep)
    big_lam = _coeff_at(l2, exp_rep)
    l2_tail_pos = bool(l2) and _cmp(l2[-1][0], exp_rep) < 0
    rho = _coeff_at(r1, exp_rep)
    rho_star = _coeff_at(big_r.right._rep, exp_rep)
    for np in range(big_lam + rho + target.n + 1):
        if _works(np, j, lam, big_lam, l2_tail_pos, rho, rho_star, target.n):
            return BaseNbhd(x, j, np)
    raise WitnessNotFound("threshold scan exhausted its proven bound")


@dataclass(frozen=True)
class InclusionResult:
    """Outcome of a truncated inclusion check; ``ok`` when no member escaped."""

    counterexample: Optional[BAlphaElement]

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _max_coeff(rep: tuple) -> int:
    return max((c for _, c in rep), default=0)


def iter_members(d: NbhdDescriptor, bound: int) -> Iterator[BAlphaElement]:
    """Members of d whose coefficients all stay <= bound, deterministically.

    Order: the center first, then the punctured members with the right offset
    varying slowest and each offset enumerated in increasing ordinal order.
    """
    center = d.center
    fits_center = _max_coeff(center.left._rep) <= bound and _max_coeff(center.right._rep) <= bound
    if isinstance(d, Singleton):
        if fits_center:
            yield center
        return
    if fits_center:
        yield center
    parts = _base_parts(d)
    if _max_coeff(parts.a_dec) > bound or _max_coeff(parts.b_dec) > bound:
        return
    level = center.level
    offsets = [
        (o, o.coeff_at(d.j - 1)) for o in enumerate_below_omega_pow(d.j, bound)
    ]
    a_dec = Ordinal._wrap(parts.a_dec)
    b_dec = Ordinal._wrap(parts.b_dec)
    for delta, delta_head in offsets:
        right = b_dec + delta
        for gamma, gamma_head in offsets:
            if gamma_head > d.n or delta_head > d.n:
                yield BAlphaElement(level, a_dec + gamma, right)


def verify_shift_inclusion(
    l: BAlphaElement,
    v: NbhdDescriptor,
    r: BAlphaElement,
    target: NbhdDescriptor,
    bound: int,
) -> InclusionResult:
    """Check l·v·r ⊆ target over every member of v with coefficients <= bound.

    Exhaustive relative to the truncation; returns the first escaping member
    in the deterministic order of ``iter_members``.
    """
    for e in (l, r, target.center):
        _check_level(v.center.level, e)
    lp = (l.left._rep, l.right._rep)
    rp = (r.left._rep, r.right._rep)
    if isinstance(target, Singleton):
        t_parts = None
        t_center = (target.center.left._rep, target.center.right._rep)
    else:
        t_parts = _base_parts(target)
        t_center = None
    for member in iter_members(v, bound):
        za, zb = _pair_mul(lp[0], lp[1], member.left._rep, member.right._rep)
        za, zb = _pair_mul(za, zb, rp[0], rp[1])
        if t_parts is None:
            if (za, zb) != t_center:
                return InclusionResult(member)
        elif not _parts_contain(t_parts, za, zb):
            return InclusionResult(member)
    return InclusionResult(None)


# --- separation -------------------------------------------------------------


def _offset_head(point: Ordinal, base: Ordinal, j: int) -> int:
    return (point - base).coeff_at(j - 1)


def _rect(p: BAlphaElement) -> Tuple[Ordinal, Ordinal, Ordinal, Ordinal]:
    return (
        decrement_last(p.left),
        p.left,
        decrement_last(p.right),
        p.right,
    )


def _in_rect(rect, q: BAlphaElement) -> bool:
    a_lo, a_hi, b_lo, b_hi = rect
    return a_lo <= q.left < a_hi and b_lo <= q.right < b_hi


def _excluding_threshold(p: BAlphaElement, j: int, other: BAlphaElement) -> int:
    """Least threshold whose punctured neighborhood at p omits ``other``."""
    rect = _rect(p)
    if not _in_rect(rect, other):
        return 0
    return max(
        _offset_head(other.left, rect[0], j),
        _offset_head(other.right, rect[2], j),
    )


def hausdorff_witness(
    spec: TopologySpec, p: BAlphaElement, q: BAlphaElement
) -> Tuple[NbhdDescriptor, NbhdDescriptor]:
    """Provably disjoint descriptors around two distinct points.

    Disjointness is decided by interval analysis on the punctured rectangles:
    rectangles of equal level are equal or disjoint, and equality would force
    the centers to coincide; rectangles of different levels are nested or
    disjoint, and on a nested pair every point of the inner rectangle (and
    its center) shows the same pair of head coefficients to the outer
    descriptor, so one threshold shuts them all out.  Centers are excluded
    from the other side's descriptor the same way.
    """
    _check_level(spec, p)
    _check_level(spec, q)
    if p == q:
        raise EqualPoints(f"{format_balpha(p)} appears twice")
    cp = classify_point(spec, p)
    cq = classify_point(spec, q)
    if isinstance(cp, Isolated) and isinstance(cq, Isolated):
        return Singleton(p), Singleton(q)
    if isinstance(cq, Isolated):
        return BaseNbhd(p, cp.level, _excluding_threshold(p, cp.level, q)), Singleton(q)
    if isinstance(cp, Isolated):
        return Singleton(p), BaseNbhd(q, cq.level, _excluding_threshold(q, cq.level, p))
    jp, jq = cp.level, cq.level
    n_p = _excluding_threshold(p, jp, q)
    n_q = _excluding_threshold(q, jq, p)
    if jp != jq:
        small, j_small = (p, jp) if jp < jq else (q, jq)
        big, j_big = (q, jq) if jp < jq else (p, jp)
        rect_small = _rect(small)
        rect_big = _rect(big)
        overlap = max(rect_small[0], rect_big[0]) < min(rect_small[1], rect_big[1]) and max(
            rect_small[2], rect_big[2]
        ) < min(rect_small[3], rect_big[3])
        if overlap:
            # nested: every point of the small rectangle, and its center,
            # sits at constant head offsets inside the big rectangle
            shared = max(
                _offset_head(rect_small[0], rect_big[0], j_big),
                _offset_head(rect_small[2], rect_big[2], j_big),
                _offset_head(small.left, rect_big[0], j_big),
                _offset_head(small.right, rect_big[2], j_big),
            )
            if jp < jq:
                n_q = max(n_q, shared)
            else:
                n_p = max(n_p, shared)
    return BaseNbhd(p, jp, n_p), BaseNbhd(q, jq, n_q)


# --- boxes and the lattice ---------------------------------------------------


@dataclass(frozen=True)
class BoxSquare:
    """The square of box indices {(p, q) : p <= bound, q <= bound}."""

    bound: int

    def indices(self) -> List[Tuple[int, int]]:
        rng = range(self.bound + 1)
        return [(p, q) for p in rng for q in rng]

    def __contains__(self, pq: Tuple[int, int]) -> bool:
        p, q = pq
        return 0 <= p <= self.bound and 0 <= q <= self.bound

    def __iter__(self):
        return iter(self.indices())


def uncovered_boxes(spec: TopologySpec, j: int, n: int) -> BoxSquare:
    """Box indices whose full box escapes ``BaseNbhd((w^j, w^j), j, n)``.

    A box (p, q) at level j-1 consists of the pairs (p·w^{j-1} + g*,
    q·w^{j-1} + d*) with residuals below omega**(j-1); all of them show the
    constant head pair (p, q) to the corner descriptor, so the box is fully
    inside when max(p, q) > n and fully outside otherwise.  The uncovered
    part is therefore exactly the (n+1) x (n+1) square.
    """
    if j < 1:
        raise NotALimitLevel("the level j must be positive")
    if Ordinal(j) >= spec.i:
        raise NotALimitLevel(f"level {j} carries no punctured neighborhoods for {spec}")
    if n < 0:
        raise ValueError("the threshold must be non-negative")
    return BoxSquare(n)


class FinerResult(NamedTuple):
    """Comparison of two topologies, with a strictness certificate point."""

    relation: str  # strictly-finer | equal | strictly-coarser | incomparable-levels
    certificate: Optional[BAlphaElement]


def topology_finer(spec1: TopologySpec, spec2: TopologySpec) -> FinerResult:
    """Compare two members of the family under inclusion of open sets.

    Same alpha required; the topology with the smaller index i is strictly
    finer.  For a strict pair the point (w^i_min, w^i_min) certifies it:
    isolated in the finer topology, a limit point in the coarser one.
    """
    if spec1.alpha != spec2.alpha:
        return FinerResult("incomparable-levels", None)
    if spec1.i == spec2.i:
        return FinerResult("equal", None)
    i_min = min(spec1.i, spec2.i)
    corner = omega_pow(i_min)
    certificate = BAlphaElement(spec1.alpha, corner, corner)
    relation = "strictly-finer" if spec1.i < spec2.i else "strictly-coarser"
    return FinerResult(relation, certificate)


def enumerate_topologies(alpha: OrdinalLike, cap: Optional[int] = None) -> List[TopologySpec]:
    """The family at level alpha, finest first.

    Finite alpha gives the full list of indices 1..alpha.  At alpha == omega
    the family is infinite, so ``cap`` many finite indices are listed and the
    index-omega topology closes the list; ``cap`` is required there.
    """
    alpha = Ordinal(alpha)
    if alpha > OMEGA:
        raise UnsupportedLevel(f"alpha must be at most omega, got {alpha}")
    if not alpha:
        raise UnsupportedLevel("alpha must be at least 1")
    if alpha.is_finite:
        return [TopologySpec(Ordinal(i), alpha) for i in range(1, int(alpha) + 1)]
    if cap is None:
        raise ValueError("a finite cap is required to list the family at alpha = omega")
    specs = [TopologySpec(Ordinal(i), alpha) for i in range(1, cap + 1)]
    specs.append(TopologySpec(OMEGA, OMEGA))
    return specs


# --- descriptor text form -----------------------------------------------------


def format_descriptor(d: NbhdDescriptor) -> str:
    if isinstance(d, Singleton):
        return f"sing({format_balpha(d.center)})"
    return f"base({format_balpha(d.center)}; j={d.j}; n={d.n})"


def parse_descriptor(text: str, level: OrdinalLike) -> NbhdDescriptor:
    """Parse "sing(ELEM)" or "base(ELEM; j=J; n=N)"."""
    s = text.strip()
    if s.startswith("sing(") and s.endswith(")"):
        return Singleton(parse_balpha(s[len("sing("):-1], level))
    if s.startswith("base(") and s.endswith(")"):
        body = s[len("base("):-1]
        fields = body.split(";")
        if len(fields) != 3:
            raise ParseError("expected 'base(ELEM; j=J; n=N)'", 0)
        center = parse_balpha(fields[0], level)
        values = {}
        for field in fields[1:]:
            name, _, raw = field.partition("=")
            name = name.strip()
            if name not in ("j", "n") or name in values:
                raise ParseError("expected fields j= and n=", text.find(field))
            try:
                values[name] = int(raw.strip())
            except ValueError:
                raise ParseError(f"field {name} must be an integer", text.find(field)) from None
        return BaseNbhd(center, values["j"], values["n"])
    raise ParseError("expected 'sing(...)' or 'base(...)'", 0)
