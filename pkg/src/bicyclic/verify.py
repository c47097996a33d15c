"""Seeded, reproducible verification suites over the algebra and topology.

Every suite returns a ``Report``; identical (suite, seed, bound, trials)
always reproduces the identical report.  Randomized properties draw from
``random.Random(seed)`` only, and exhaustive parts enumerate in fixed order,
so reports are safe to pin in golden tests.  At most ``MAX_RECORDED``
failures are kept per report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import WitnessNotFound
from .iso import CaseTag, classify_case, from_bruck, to_bruck
from .ordinal import OMEGA, Ordinal, ZERO, is_canonical, omega_pow
from .semigroup import (
    BAlphaElement,
    balpha_mul,
    bicyclic_reduce,
    bruck_mul,
    element,
    format_balpha,
    format_bruck,
)
from .topology import (
    BaseNbhd,
    Isolated,
    Limit,
    TopologySpec,
    base_nbhd,
    classify_point,
    continuity_witness,
    enumerate_topologies,
    format_descriptor,
    hausdorff_witness,
    iter_members,
    nbhd_contains,
    topology_finer,
    uncovered_boxes,
    verify_shift_inclusion,
)

__all__ = [
    "MAX_RECORDED",
    "Report",
    "SUITES",
    "balpha_assoc",
    "bicyclic_oracle",
    "boxes",
    "iso_homomorphism",
    "lattice",
    "ordinal_axioms",
    "rand_element",
    "rand_limit_point",
    "rand_ordinal_below",
    "run_suite",
    "separation",
    "topology_witnesses",
    "verify_all",
]

MAX_RECORDED = 25

AlphaLike = Union[int, str, Ordinal]


@dataclass
class Report:
    """Outcome of one suite run; ``passed`` iff no failure was found."""

    suite: str
    seed: int
    bound: int
    trials: int
    failures: List[Dict[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, inputs: str, expected: str, got: str) -> None:
        if len(self.failures) < MAX_RECORDED:
            self.failures.append({"inputs": inputs, "expected": expected, "got": got})

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "seed": self.seed,
            "bound": self.bound,
            "trials": self.trials,
            "failures": self.failures,
            "passed": self.passed,
        }


# --- samplers ----------------------------------------------------------------

_OMEGA_EXP_CAP = 4  # finite exponents used when sampling below omega**omega


def _exponent_pool(alpha: Ordinal) -> List[int]:
    if alpha.is_finite:
        return list(range(int(alpha)))
    return list(range(_OMEGA_EXP_CAP + 1))


def rand_ordinal_below(
    rng: random.Random, alpha: AlphaLike, max_coeff: int = 8, max_terms: int = 3
) -> Ordinal:
    """A random ordinal below omega**alpha with small coefficients."""
    pool = _exponent_pool(Ordinal(alpha))
    k = rng.randint(0, min(max_terms, len(pool)))
    exps = sorted(rng.sample(pool, k), reverse=True)
    value = ZERO
    for e in exps:
        value = value + Ordinal._wrap(((Ordinal(e)._rep, rng.randint(1, max_coeff)),))
    return value


def rand_element(
    rng: random.Random, alpha: AlphaLike, max_coeff: int = 8, max_terms: int = 3
) -> BAlphaElement:
    alpha = Ordinal(alpha)
    return BAlphaElement(
        alpha,
        rand_ordinal_below(rng, alpha, max_coeff, max_terms),
        rand_ordinal_below(rng, alpha, max_coeff, max_terms),
    )


def _rand_coord_ending_at(
    rng: random.Random, alpha: Ordinal, j: int, max_coeff: int
) -> Ordinal:
    """A random coordinate below omega**alpha whose final term is c * omega**j."""
    pool = [e for e in _exponent_pool(alpha) if e > j]
    k = rng.randint(0, min(2, len(pool)))
    high = ZERO
    for e in sorted(rng.sample(pool, k), reverse=True):
        high = high + Ordinal._wrap(((Ordinal(e)._rep, rng.randint(1, max_coeff)),))
    return high + Ordinal._wrap(((Ordinal(j)._rep, rng.randint(1, max_coeff)),))


def rand_limit_point(
    rng: random.Random, alpha: AlphaLike, j: int, max_coeff: int = 4
) -> BAlphaElement:
    """A random point whose coordinates both end in exponent j >= 1."""
    alpha = Ordinal(alpha)
    return BAlphaElement(
        alpha,
        _rand_coord_ending_at(rng, alpha, j, max_coeff),
        _rand_coord_ending_at(rng, alpha, j, max_coeff),
    )


def _fmt_inputs(**kv: object) -> str:
    return " ".join(f"{k}={v}" for k, v in kv.items())


# --- suites --------------------------------------------------------------------


def ordinal_axioms(seed: int = 0, trials: int = 100_000) -> Report:
    """Associativity, subtraction inverses, monotonicity, canonicity closure.

    Random part: ``trials`` triples with exponents up to omega*2 and
    coefficients up to 50.  Exhaustive part: all pairs, and all triples for
    associativity, over the hundred ordinals w*k + m with k, m <= 9.
    """
    rng = random.Random(seed)
    rep = Report("ordinal-axioms", seed, 0, trials)
    exp_pool = (
        [Ordinal(m) for m in range(10)]
        + [OMEGA + m for m in range(10)]
        + [Ordinal("w*2")]
    )

    def sample() -> Ordinal:
        k = rng.randint(0, 4)
        exps = sorted(rng.sample(exp_pool, k), reverse=True)
        value = ZERO
        for e in exps:
            value = value + Ordinal._wrap(((e._rep, rng.randint(1, 50)),))
        return value

    def check_triple(x: Ordinal, y: Ordinal, z: Ordinal) -> None:
        lhs = (x + y) + z
        rhs = x + (y + z)
        if lhs != rhs:
            rep.record(_fmt_inputs(x=x, y=y, z=z), f"assoc {lhs}", str(rhs))
        if not is_canonical(lhs):
            rep.record(_fmt_inputs(x=x, y=y, z=z), "canonical sum", str(lhs))
        a = x + y
        if x + (a - x) != a:
            rep.record(_fmt_inputs(a=a, b=x), f"b + (a-b) == {a}", str(x + (a - x)))
        if (x + y) - x != y:
            rep.record(_fmt_inputs(b=x, c=y), f"(b+c) - b == {y}", str((x + y) - x))
        if y < z and not (x + y < x + z):
            rep.record(_fmt_inputs(x=x, y=y, z=z), "x+y < x+z", "not <")
        if x <= y and not (x + z <= y + z):
            rep.record(_fmt_inputs(x=x, y=y, z=z), "x+z <= y+z", "not <=")

    for _ in range(trials):
        check_triple(sample(), sample(), sample())
    grid = [_scaled_power(Ordinal(1), k) + m for k in range(10) for m in range(10)]
    for x in grid:
        for y in grid:
            a = x + y
            if x + (a - x) != a or a - x != y:
                rep.record(_fmt_inputs(x=x, y=y), "subtraction inverse", str(a - x))
            if x < y and not (y > x):
                rep.record(_fmt_inputs(x=x, y=y), "order antisymmetry", "violated")
    for x in grid:
        for y in grid:
            xy = x + y
            for z in grid:
                if xy + z != x + (y + z):
                    rep.record(_fmt_inputs(x=x, y=y, z=z), "associativity", "violated")
    return rep


def bicyclic_oracle(limit: int = 8) -> Report:
    """Pair products at level 1 against word rewriting, exhaustively."""
    rep = Report("bicyclic-oracle", 0, limit, (limit + 1) ** 4)
    for a in range(limit + 1):
        for b in range(limit + 1):
            x = element(1, a, b)
            for c in range(limit + 1):
                word_prefix = "q" * a + "p" * b + "q" * c
                for d in range(limit + 1):
                    got = balpha_mul(x, element(1, c, d))
                    expected = bicyclic_reduce(word_prefix + "p" * d)
                    if got != expected:
                        rep.record(
                            _fmt_inputs(x=(a, b), y=(c, d)),
                            format_balpha(expected),
                            format_balpha(got),
                        )
    return rep


def balpha_assoc(
    seed: int = 0,
    trials: int = 100_000,
    exhaustive_max: int = 6,
    alphas: Sequence[AlphaLike] = (2, 3, "w"),
) -> Report:
    """Associativity and closure: exhaustive at level 1, randomized above."""
    rng = random.Random(seed)
    rep = Report("balpha-assoc", seed, exhaustive_max, trials)
    small = [
        element(1, a, b)
        for a in range(exhaustive_max + 1)
        for b in range(exhaustive_max + 1)
    ]
    for x in small:
        for y in small:
            xy = balpha_mul(x, y)
            for z in small:
                if balpha_mul(xy, z) != balpha_mul(x, balpha_mul(y, z)):
                    rep.record(
                        _fmt_inputs(x=x, y=y, z=z), "associativity", "violated"
                    )
    for alpha in alphas:
        for _ in range(trials):
            x = rand_element(rng, alpha)
            y = rand_element(rng, alpha)
            z = rand_element(rng, alpha)
            lhs = balpha_mul(balpha_mul(x, y), z)
            rhs = balpha_mul(x, balpha_mul(y, z))
            if lhs != rhs:
                rep.record(
                    _fmt_inputs(alpha=alpha, x=x, y=y, z=z),
                    format_balpha(lhs),
                    format_balpha(rhs),
                )
            if not (is_canonical(lhs.left) and is_canonical(lhs.right)):
                rep.record(_fmt_inputs(alpha=alpha, x=x, y=y, z=z), "canonical", str(lhs))
    return rep


_CASES = (
    CaseTag.LeftDominates,
    CaseTag.RightDominates,
    CaseTag.EqualHeadsTailGreater,
    CaseTag.EqualHeadsTailLeq,
)


def _stratified_pair(
    rng: random.Random, alpha: Ordinal, tag: CaseTag, head_cap: int = 6
) -> Tuple[BAlphaElement, BAlphaElement]:
    """A random pair of level-(alpha+1) elements exercising the given branch."""

    def tails() -> Ordinal:
        return rand_ordinal_below(rng, alpha, max_coeff=5, max_terms=2)

    def coord(head: int, tail: Ordinal) -> Ordinal:
        return _scaled_power(alpha, head) + tail

    n1, o1 = rng.randint(0, head_cap), rng.randint(0, head_cap)
    if tag is CaseTag.LeftDominates:
        m1 = rng.randint(0, head_cap - 1)
        k1 = rng.randint(m1 + 1, head_cap)
        b_tail, c_tail = tails(), tails()
    elif tag is CaseTag.RightDominates:
        k1 = rng.randint(0, head_cap - 1)
        m1 = rng.randint(k1 + 1, head_cap)
        b_tail, c_tail = tails(), tails()
    elif tag is CaseTag.EqualHeadsTailGreater:
        m1 = k1 = rng.randint(0, head_cap)
        b_tail = tails()
        bump = tails()
        while not bump:
            bump = tails()
        c_tail = b_tail + bump
    else:
        m1 = k1 = rng.randint(0, head_cap)
        c_tail = tails()
        b_tail = c_tail + tails()
    level = alpha + 1
    x = BAlphaElement(level, coord(n1, tails()), coord(m1, b_tail))
    y = BAlphaElement(level, coord(k1, c_tail), coord(o1, tails()))
    return x, y


def _scaled_power(alpha: Ordinal, coeff: int) -> Ordinal:
    return Ordinal._wrap(((alpha._rep, coeff),)) if coeff else ZERO


def iso_homomorphism(
    seed: int = 0, trials: int = 100_000, alphas: Sequence[AlphaLike] = (1, 2, 3)
) -> Report:
    """Bijection, homomorphism and commuting square, stratified over branches.

    ``trials`` pairs per level, split evenly over the four product branches
    so each branch receives trials/4 hits.
    """
    rng = random.Random(seed)
    rep = Report("iso-homomorphism", seed, 0, trials)
    per_case = trials // len(_CASES)
    for alpha_like in alphas:
        alpha = Ordinal(alpha_like)
        for tag in _CASES:
            for _ in range(per_case):
                x, y = _stratified_pair(rng, alpha, tag)
                ctx = _fmt_inputs(alpha=alpha, x=x, y=y, tag=tag.name)
                if classify_case(x, y, alpha) is not tag:
                    rep.record(ctx, tag.name, classify_case(x, y, alpha).name)
                fx = to_bruck(alpha, x)
                fy = to_bruck(alpha, y)
                if from_bruck(alpha, fx) != x:
                    rep.record(ctx, "round trip", format_bruck(fx))
                if to_bruck(alpha, from_bruck(alpha, fy)) != fy:
                    rep.record(ctx, "reverse round trip", format_bruck(fy))
                xy = balpha_mul(x, y)
                fxy = bruck_mul(fx, fy, balpha_mul)
                if to_bruck(alpha, xy) != fxy:
                    rep.record(ctx, format_bruck(to_bruck(alpha, xy)), format_bruck(fxy))
                if from_bruck(alpha, fxy) != xy:
                    rep.record(ctx, format_balpha(xy), format_balpha(from_bruck(alpha, fxy)))
    return rep


def _rand_spec(rng: random.Random, alpha: Ordinal) -> TopologySpec:
    if alpha.is_finite:
        choices: List[Ordinal] = [Ordinal(i) for i in range(1, int(alpha) + 1)]
    else:
        choices = [Ordinal(i) for i in range(1, _OMEGA_EXP_CAP + 2)] + [OMEGA]
    return TopologySpec(rng.choice(choices), alpha)


# sampling weights: isolated points are cheap to verify, level-2 punctured
# neighborhoods cost (bound+1)**4 membership checks each
_LIMIT_SHARE = 0.55
_DEEP_LIMIT_SHARE = 0.22


def _rand_point_for_spec(
    rng: random.Random, spec: TopologySpec, max_coeff: int = 4
) -> BAlphaElement:
    i = spec.i
    limit_levels = []
    if i > 1:
        top = (int(i) - 1) if i.is_finite else _OMEGA_EXP_CAP
        if spec.alpha.is_finite:
            top = min(top, int(spec.alpha) - 1)
        limit_levels = list(range(1, top + 1))
    if limit_levels and rng.random() < _LIMIT_SHARE:
        if len(limit_levels) > 1 and rng.random() < _DEEP_LIMIT_SHARE:
            j = rng.choice(limit_levels[1:])
        else:
            j = limit_levels[0]
        return rand_limit_point(rng, spec.alpha, j, max_coeff)
    return rand_element(rng, spec.alpha, max_coeff=max_coeff)


def topology_witnesses(
    seed: int = 0,
    trials: int = 10_000,
    alphas: Sequence[AlphaLike] = (1, 2, 3),
    bounds: Sequence[int] = (4, 8),
) -> Report:
    """Continuity witnesses verified by truncated enumeration.

    ``trials`` random (spec, l, r, x, n) configurations per level; every
    witness must pass the inclusion check at each bound and the symbolic
    search must never fail.
    """
    rng = random.Random(seed)
    rep = Report("topology-witnesses", seed, max(bounds), trials)
    for alpha_like in alphas:
        alpha = Ordinal(alpha_like)
        for _ in range(trials):
            spec = _rand_spec(rng, alpha)
            x = _rand_point_for_spec(rng, spec)
            l = rand_element(rng, alpha, max_coeff=3, max_terms=2)
            r = rand_element(rng, alpha, max_coeff=3, max_terms=2)
            cls = classify_point(spec, x)
            if isinstance(cls, Limit) and rng.random() < 0.4:
                # pin one inner coordinate strictly inside the final block of
                # x so that mixed shift regimes appear often
                off = rand_ordinal_below(rng, cls.level, max_coeff=3, max_terms=2)
                from .ordinal import decrement_last as _dec

                if rng.random() < 0.5:
                    l = BAlphaElement(alpha, l.left, _dec(x.left) + off)
                else:
                    r = BAlphaElement(alpha, _dec(x.right) + off, r.right)
            n = rng.randint(0, 6)
            y = balpha_mul(balpha_mul(l, x), r)
            target = base_nbhd(spec, y, n)
            ctx = _fmt_inputs(spec=spec, l=l, r=r, x=x, n=n)
            try:
                witness = continuity_witness(spec, l, r, x, target)
            except WitnessNotFound as exc:
                rep.record(ctx, "a witness", f"WitnessNotFound: {exc}")
                continue
            for bound in bounds:
                outcome = verify_shift_inclusion(l, witness, r, target, bound)
                if not outcome.ok:
                    rep.record(
                        ctx + f" bound={bound} witness={format_descriptor(witness)}",
                        "ok",
                        format_balpha(outcome.counterexample),
                    )
    return rep


def separation(
    seed: int = 0,
    trials: int = 10_000,
    alphas: Sequence[AlphaLike] = (2, 3),
    bound: int = 8,
) -> Report:
    """Disjoint descriptor pairs, cross-checked by truncated enumeration."""
    rng = random.Random(seed)
    rep = Report("separation", seed, bound, trials)
    for alpha_like in alphas:
        alpha = Ordinal(alpha_like)
        for _ in range(trials):
            spec = _rand_spec(rng, alpha)
            p = _rand_point_for_spec(rng, spec)
            q = _rand_point_for_spec(rng, spec)
            if p == q:
                continue
            ctx = _fmt_inputs(spec=spec, p=p, q=q)
            dp, dq = hausdorff_witness(spec, p, q)
            if not (nbhd_contains(dp, p) and nbhd_contains(dq, q)):
                rep.record(ctx, "descriptors contain their centers", "missing")
                continue
            for member in iter_members(dp, bound):
                if nbhd_contains(dq, member):
                    rep.record(ctx, "disjoint", f"shared {format_balpha(member)}")
                    break
            else:
                for member in iter_members(dq, bound):
                    if nbhd_contains(dp, member):
                        rep.record(ctx, "disjoint", f"shared {format_balpha(member)}")
                        break
    return rep


def boxes(
    js: Sequence[int] = (1, 2), max_n: int = 6, bound: int = 4, extra: int = 2
) -> Report:
    """Uncovered boxes match truncated enumeration; high corners are members.

    For each level j and threshold n <= max_n, every box index up to
    max_n + extra is classified by enumerating its elements with residual
    coefficients <= bound.
    """
    checks = 0
    rep = Report("boxes", 0, bound, 0)
    for j in js:
        spec = TopologySpec(Ordinal(j + 1), Ordinal(j + 1))
        corner = omega_pow(j)
        residuals = list(_residuals(j - 1, bound))
        for n in range(max_n + 1):
            descriptor = BaseNbhd(BAlphaElement(spec.alpha, corner, corner), j, n)
            square = uncovered_boxes(spec, j, n)
            for p in range(max_n + extra + 1):
                for q in range(max_n + extra + 1):
                    base_l = _scaled_power(Ordinal(j - 1), p)
                    base_r = _scaled_power(Ordinal(j - 1), q)
                    fully_inside = True
                    for gs in residuals:
                        for ds in residuals:
                            checks += 1
                            member = BAlphaElement(spec.alpha, base_l + gs, base_r + ds)
                            if not nbhd_contains(descriptor, member):
                                fully_inside = False
                                break
                        if not fully_inside:
                            break
                    expected_uncovered = (p, q) in square
                    if fully_inside == expected_uncovered:
                        rep.record(
                            _fmt_inputs(j=j, n=n, box=(p, q)),
                            "uncovered iff not fully inside",
                            f"fully_inside={fully_inside}",
                        )
                    if max(p, q) > n:
                        checks += 1
                        corner_elt = BAlphaElement(spec.alpha, base_l, base_r)
                        if not nbhd_contains(descriptor, corner_elt):
                            rep.record(
                                _fmt_inputs(j=j, n=n, box=(p, q)),
                                "corner element inside",
                                "outside",
                            )
    rep.trials = checks
    return rep


def _residuals(j: int, bound: int) -> Iterable[Ordinal]:
    from .ordinal import enumerate_below_omega_pow

    return enumerate_below_omega_pow(j, bound)


def lattice(
    seed: int = 0,
    alphas: Sequence[AlphaLike] = (1, 2, 3, "w"),
    omega_cap: int = 12,
    samples: int = 100,
) -> Report:
    """Strict total order under inclusion, certificates, and discreteness at i=1."""
    rng = random.Random(seed)
    rep = Report("lattice", seed, omega_cap, 0)
    checks = 0
    for alpha_like in alphas:
        alpha = Ordinal(alpha_like)
        specs = enumerate_topologies(alpha, cap=omega_cap if not alpha.is_finite else None)
        for a_idx, s1 in enumerate(specs):
            for b_idx, s2 in enumerate(specs):
                checks += 1
                rel = topology_finer(s1, s2)
                if a_idx < b_idx:
                    expected = "strictly-finer"
                elif a_idx > b_idx:
                    expected = "strictly-coarser"
                else:
                    expected = "equal"
                if rel.relation != expected:
                    rep.record(_fmt_inputs(s1=s1, s2=s2), expected, rel.relation)
                    continue
                if rel.certificate is not None:
                    finer, coarser = (s1, s2) if rel.relation == "strictly-finer" else (s2, s1)
                    if not isinstance(classify_point(finer, rel.certificate), Isolated):
                        rep.record(_fmt_inputs(s1=s1, s2=s2), "isolated in finer", "limit")
                    if not isinstance(classify_point(coarser, rel.certificate), Limit):
                        rep.record(_fmt_inputs(s1=s1, s2=s2), "limit in coarser", "isolated")
        discrete = specs[0]
        for _ in range(samples):
            checks += 1
            pt = rand_element(rng, alpha)
            if not isinstance(classify_point(discrete, pt), Isolated):
                rep.record(_fmt_inputs(spec=discrete, point=pt), "isolated", "limit")
    other = topology_finer(TopologySpec(Ordinal(1), Ordinal(2)), TopologySpec(Ordinal(1), Ordinal(3)))
    checks += 1
    if other.relation != "incomparable-levels":
        rep.record("alpha=2 vs alpha=3", "incomparable-levels", other.relation)
    rep.trials = checks
    return rep


# --- dispatch -----------------------------------------------------------------


def _as_alphas(alpha: Optional[AlphaLike], default: Sequence[AlphaLike]) -> Sequence[AlphaLike]:
    return default if alpha is None else (alpha,)


SUITES: Dict[str, Callable[..., Report]] = {}


def _suite(name: str, runner: Callable[..., Report]) -> None:
    SUITES[name] = runner


_suite(
    "ordinal-axioms",
    lambda seed, trials, bound, alpha: ordinal_axioms(
        seed=seed, trials=5_000 if trials is None else trials
    ),
)
_suite(
    "bicyclic-oracle",
    lambda seed, trials, bound, alpha: bicyclic_oracle(limit=8 if bound is None else bound),
)
_suite(
    "balpha-assoc",
    lambda seed, trials, bound, alpha: balpha_assoc(
        seed=seed,
        trials=2_000 if trials is None else trials,
        alphas=_as_alphas(alpha, (2, 3, "w")),
    ),
)
_suite(
    "iso-homomorphism",
    lambda seed, trials, bound, alpha: iso_homomorphism(
        seed=seed,
        trials=4_000 if trials is None else trials,
        alphas=_as_alphas(alpha, (1, 2, 3)),
    ),
)
_suite(
    "topology-witnesses",
    lambda seed, trials, bound, alpha: topology_witnesses(
        seed=seed,
        trials=300 if trials is None else trials,
        alphas=_as_alphas(alpha, (1, 2, 3)),
        bounds=(4, 8) if bound is None else (min(4, bound), bound),
    ),
)
_suite(
    "separation",
    lambda seed, trials, bound, alpha: separation(
        seed=seed,
        trials=300 if trials is None else trials,
        alphas=_as_alphas(alpha, (2, 3)),
        bound=8 if bound is None else bound,
    ),
)
_suite(
    "boxes",
    lambda seed, trials, bound, alpha: boxes(bound=4 if bound is None else bound),
)
_suite(
    "lattice",
    lambda seed, trials, bound, alpha: lattice(
        seed=seed,
        alphas=_as_alphas(alpha, (1, 2, 3, "w")),
        samples=100 if trials is None else trials,
    ),
)


def run_suite(
    name: str,
    seed: int = 0,
    trials: Optional[int] = None,
    bound: Optional[int] = None,
    alpha: Optional[AlphaLike] = None,
) -> Report:
    """Run one named suite with CLI-scale defaults for unset knobs."""
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed, trials, bound, alpha)


def verify_all(
    seed: int = 0,
    trials: Optional[int] = None,
    bound: Optional[int] = None,
    alpha: Optional[AlphaLike] = None,
) -> List[Report]:
    """Run every suite in a fixed order."""
    return [run_suite(name, seed, trials, bound, alpha) for name in SUITES]
