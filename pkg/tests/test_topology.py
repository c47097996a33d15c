"""Topology layer: classification, descriptors, witnesses, decision checks."""

import itertools
import random

import pytest

from bicyclic.errors import (
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
from bicyclic.ordinal import OMEGA, Ordinal, ZERO, enumerate_below_omega_pow, omega_pow
from bicyclic.semigroup import BAlphaElement, balpha_mul, element, identity
from bicyclic.topology import (
    BaseNbhd,
    Isolated,
    Limit,
    Singleton,
    TopologySpec,
    base_nbhd,
    classify_point,
    continuity_witness,
    enumerate_topologies,
    forced_nbhd_contains,
    format_descriptor,
    hausdorff_witness,
    iter_members,
    nbhd_contains,
    parse_descriptor,
    spec,
    topology_finer,
    transport,
    transport_inv,
    uncovered_boxes,
    verify_shift_inclusion,
)
from bicyclic.verify import rand_element, rand_limit_point


def limit_points(alpha, max_coeff):
    """Every point of the level-alpha monoid, coefficients <= max_coeff, whose
    coordinates end in a common exponent >= 1."""
    coords = {}
    for c in enumerate_below_omega_pow(alpha, max_coeff):
        t = c.terms
        if t and t[-1][0] >= 1:
            coords.setdefault(int(t[-1][0]), []).append(c)
    points = []
    for j, pool in sorted(coords.items()):
        points.extend(
            (j, BAlphaElement(Ordinal(alpha), a, b))
            for a in pool
            for b in pool
        )
    return points


# --- classification -----------------------------------------------------------


def test_classify_examples():
    assert classify_point(spec(2, 2), element(2, "w", "w")) == Limit(1)
    assert classify_point(spec(2, 2), element(2, "w*3 + 2", "w*5")) == Isolated()
    assert classify_point(spec(1, 2), element(2, "w", "w")) == Isolated()
    assert classify_point(spec(3, 3), element(3, "w^2*2 + w", "w*4")) == Limit(1)


def test_classify_edge_rules():
    s = spec(3, 3)
    assert classify_point(s, identity(3)) == Isolated()          # zero coordinates
    assert classify_point(s, element(3, "w", 0)) == Isolated()   # one zero coordinate
    assert classify_point(s, element(3, "w + 1", "w + 1")) == Isolated()  # exponent 0
    assert classify_point(s, element(3, "w^2", "w^2")) == Limit(2)
    assert classify_point(spec(2, 3), element(3, "w^2", "w^2")) == Isolated()  # j >= i
    assert classify_point(spec("w", "w"), element("w", "w^4", "w^4")) == Limit(4)
    with pytest.raises(LevelMismatch):
        classify_point(s, element(2, 0, 0))


def test_spec_validation():
    with pytest.raises(UnsupportedLevel):
        spec(1, "w + 1")
    with pytest.raises(UnsupportedLevel):
        spec(3, 2)
    with pytest.raises(UnsupportedLevel):
        spec(0, 2)
    with pytest.raises(UnsupportedLevel):
        spec("w", 3)


# --- descriptors -----------------------------------------------------------------


def test_base_nbhd_examples():
    s = spec(2, 2)
    corner = element(2, "w", "w")
    assert base_nbhd(s, corner, 3) == BaseNbhd(corner, 1, 3)
    assert base_nbhd(s, element(2, 5, 7), 0) == Singleton(element(2, 5, 7))
    moved = element(2, "w*2", "w*3")
    assert base_nbhd(s, moved, 2) == BaseNbhd(moved, 1, 2)


def test_base_nbhd_validates_center():
    with pytest.raises(InvalidDescriptor):
        BaseNbhd(element(2, "w", "w + 1"), 1, 0)
    with pytest.raises(InvalidDescriptor):
        BaseNbhd(element(2, "w", 0), 1, 0)


def test_membership_examples():
    d = BaseNbhd(element(2, "w", "w"), 1, 3)
    assert nbhd_contains(d, element(2, 5, 2)) is True
    assert nbhd_contains(d, element(2, 4, "w")) is False
    assert nbhd_contains(d, element(2, 2, 1)) is False
    assert nbhd_contains(d, element(2, "w", "w")) is True  # center
    moved = BaseNbhd(element(2, "w*2", "w*3"), 1, 2)
    assert nbhd_contains(moved, element(2, "w + 5", "w*2 + 1")) is True
    assert nbhd_contains(moved, element(2, 5, "w*2 + 1")) is False  # left of block
    with pytest.raises(LevelMismatch):
        nbhd_contains(d, element(1, 1, 1))


def test_singleton_membership():
    d = Singleton(element(2, 4, 0))
    assert nbhd_contains(d, element(2, 4, 0))
    assert not nbhd_contains(d, element(2, 4, 1))


def test_forced_nbhd_examples():
    p = element(2, "w*2", "w*3")
    assert forced_nbhd_contains(p, element(2, "w + 7", "w*2 + 4")) is True
    assert forced_nbhd_contains(p, element(2, "w*2", "w*2 + 4")) is False
    assert forced_nbhd_contains(p, p) is True
    with pytest.raises(UndefinedForZeroCoordinate):
        forced_nbhd_contains(element(2, "w", 0), p)


def test_forced_nbhd_mixed_exponents():
    # final exponents need not match; the rectangle uses each one
    p = element(3, "w^2", "w*3")
    assert forced_nbhd_contains(p, element(3, "w*5 + 1", "w*2 + 9")) is True
    assert forced_nbhd_contains(p, element(3, "w^2", "w*2")) is False


def test_base_members_inside_forced_nbhd():
    for j, p in limit_points(3, 2):
        for n in range(4):
            d = BaseNbhd(p, j, n)
            for member in iter_members(d, 4):
                assert forced_nbhd_contains(p, member)


# --- transport -------------------------------------------------------------------


def test_transport_examples():
    p = element(2, "w*2", "w*3")
    assert transport(p, element(2, 5, 3)) == element(2, "w + 5", "w*2 + 3")
    assert transport(p, element(2, "w", "w")) == p
    assert transport_inv(p, transport(p, element(2, 7, 0))) == element(2, 7, 0)
    with pytest.raises(UndefinedForZeroCoordinate):
        transport(element(2, 0, "w"), p)


def test_transport_chart_bijection_and_coherence():
    for j, p in limit_points(3, 2):
        corner = element(3, omega_pow(j), omega_pow(j))
        chart = [
            BAlphaElement(Ordinal(3), g, d)
            for g in enumerate_below_omega_pow(j, 3)
            for d in enumerate_below_omega_pow(j, 3)
        ] + [corner]
        seen = set()
        rect = BaseNbhd(p, j, 0)
        for x in chart:
            image = transport(p, x)
            assert image not in seen, "transport must be injective on the chart"
            seen.add(image)
            assert transport_inv(p, image) == x
            for n in (0, 1, 2):
                inner = nbhd_contains(BaseNbhd(corner, j, n), x)
                outer = nbhd_contains(BaseNbhd(p, j, n), image)
                assert inner == outer
        # members transport back into the corner base
        for n in (0, 2):
            d = BaseNbhd(p, j, n)
            for member in iter_members(d, 3):
                assert nbhd_contains(BaseNbhd(corner, j, n), transport_inv(p, member))


# --- continuity witnesses ----------------------------------------------------------


def test_witness_examples():
    s = spec(2, 2)
    x = element(2, "w", "w")
    w1 = continuity_witness(s, element(2, 0, "w"), identity(2), x, Singleton(element(2, 0, "w")))
    assert w1 == BaseNbhd(x, 1, 0)
    target = BaseNbhd(x, 1, 6)
    assert continuity_witness(s, identity(2), identity(2), x, target) == BaseNbhd(x, 1, 6)
    shifted_target = BaseNbhd(element(2, "w*2", "w"), 1, 4)
    w3 = continuity_witness(s, element(2, "w", 0), identity(2), x, shifted_target)
    assert w3 == BaseNbhd(x, 1, 4)


def test_witness_isolated_point_is_singleton():
    s = spec(2, 2)
    x = element(2, 3, 5)
    l, r = element(2, "w", 1), element(2, 2, "w + 1")
    y = balpha_mul(balpha_mul(l, x), r)
    w = continuity_witness(s, l, r, x, base_nbhd(s, y, 2))
    assert w == Singleton(x)


def test_witness_target_mismatch():
    s = spec(2, 2)
    x = element(2, "w", "w")
    with pytest.raises(TargetMismatch):
        continuity_witness(s, identity(2), identity(2), x, Singleton(element(2, 0, "w")))


def test_witness_singleton_target_around_limit_center_fails():
    s = spec(2, 2)
    x = element(2, "w", "w")
    with pytest.raises(WitnessNotFound):
        continuity_witness(s, identity(2), identity(2), x, Singleton(x))


def test_verify_shift_examples():
    l, r = element(2, "w", 0), identity(2)
    target = BaseNbhd(element(2, "w*2", "w"), 1, 4)
    good = BaseNbhd(element(2, "w", "w"), 1, 4)
    assert verify_shift_inclusion(l, good, r, target, 8).ok
    bad = BaseNbhd(element(2, "w", "w"), 1, 3)
    outcome = verify_shift_inclusion(l, bad, r, target, 8)
    assert outcome.counterexample == element(2, 4, 0)
    x = element(2, 4, 4)
    y = balpha_mul(balpha_mul(l, x), r)
    assert verify_shift_inclusion(l, Singleton(x), r, Singleton(y), 8).ok


def test_witnesses_sound_randomized():
    rng = random.Random(57)
    for alpha in (2, 3):
        s_alpha = Ordinal(alpha)
        for _ in range(150):
            i = rng.randint(1, alpha)
            sp = spec(i, alpha)
            if i > 1 and rng.random() < 0.6:
                j = rng.randint(1, i - 1)
                x = rand_limit_point(rng, s_alpha, j)
            else:
                x = rand_element(rng, s_alpha, max_coeff=4)
            l = rand_element(rng, s_alpha, max_coeff=3, max_terms=2)
            r = rand_element(rng, s_alpha, max_coeff=3, max_terms=2)
            n = rng.randint(0, 5)
            y = balpha_mul(balpha_mul(l, x), r)
            target = base_nbhd(sp, y, n)
            witness = continuity_witness(sp, l, r, x, target)
            for bound in (4, 6):
                assert verify_shift_inclusion(l, witness, r, target, bound).ok


def test_witness_spot_checks_at_omega():
    s = spec("w", "w")
    x = element("w", "w^3", "w^3")
    l = element("w", "w^2*2", "w")
    r = element("w", 0, "w^3 + w^2")
    y = balpha_mul(balpha_mul(l, x), r)
    target = base_nbhd(s, y, 3)
    witness = continuity_witness(s, l, r, x, target)
    assert verify_shift_inclusion(l, witness, r, target, 3).ok
    assert verify_shift_inclusion(l, witness, r, target, 5).ok


# --- separation ---------------------------------------------------------------------


def test_hausdorff_examples():
    s = spec(2, 2)
    p, q = element(2, "w", "w"), element(2, 5, 5)
    assert hausdorff_witness(s, p, q) == (BaseNbhd(p, 1, 5), Singleton(q))
    p2, q2 = element(2, "w", "w"), element(2, "w*2", "w")
    assert hausdorff_witness(s, p2, q2) == (BaseNbhd(p2, 1, 0), BaseNbhd(q2, 1, 0))
    with pytest.raises(EqualPoints):
        hausdorff_witness(s, p, p)


def test_hausdorff_nested_levels():
    s = spec(3, 3)
    p = element(3, "w*5", "w*5")          # level-1 block inside the level-2 block
    q = element(3, "w^2", "w^2")
    dp, dq = hausdorff_witness(s, p, q)
    assert isinstance(dp, BaseNbhd) and isinstance(dq, BaseNbhd)
    for member in iter_members(dp, 6):
        assert not nbhd_contains(dq, member)
    for member in iter_members(dq, 6):
        assert not nbhd_contains(dp, member)


def test_hausdorff_randomized_disjointness():
    rng = random.Random(91)
    for alpha in (2, 3):
        s_alpha = Ordinal(alpha)
        for _ in range(150):
            sp = spec(rng.randint(1, alpha), alpha)
            def pick():
                if sp.i > 1 and rng.random() < 0.5:
                    return rand_limit_point(rng, s_alpha, rng.randint(1, int(sp.i) - 1))
                return rand_element(rng, s_alpha, max_coeff=4)
            p, q = pick(), pick()
            if p == q:
                continue
            dp, dq = hausdorff_witness(sp, p, q)
            assert nbhd_contains(dp, p) and nbhd_contains(dq, q)
            for member in iter_members(dp, 5):
                assert not nbhd_contains(dq, member)
            for member in iter_members(dq, 5):
                assert not nbhd_contains(dp, member)


def test_clopen_block_with_adjoined_corner():
    """Inside the sub-block below omega**2, one box plus its diagonal successor
    admits a disjoint descriptor around every outside point (at truncation)."""
    alpha = Ordinal(3)
    sp = spec(3, 3)
    bound = 5
    rng = random.Random(13)
    for box_n, box_m in ((0, 0), (1, 2), (2, 2)):
        block = [
            BAlphaElement(alpha, _scale(1, box_n) + g, _scale(1, box_m) + d)
            for g in range(bound + 1)
            for d in range(bound + 1)
        ]
        corner = BAlphaElement(alpha, _scale(1, box_n + 1), _scale(1, box_m + 1))
        closed_set = block + [corner]
        outside = []
        for _ in range(60):
            z = rand_element(rng, 2, max_coeff=4)  # coordinates below omega**2
            cand = BAlphaElement(alpha, z.left, z.right)
            if cand not in closed_set:
                outside.append(cand)
        outside.append(BAlphaElement(alpha, omega_pow(2), omega_pow(2)))
        outside.append(BAlphaElement(alpha, _scale(1, box_n + 1), _scale(1, box_m + 3)))
        for z in outside:
            cls = classify_point(sp, z)
            if isinstance(cls, Isolated):
                descriptor = Singleton(z)
            else:
                exclude = 0
                for t in closed_set:
                    if forced_would_cover(z, cls.level, t):
                        exclude = max(
                            exclude,
                            (t.left - _dec(z.left)).coeff_at(cls.level - 1),
                            (t.right - _dec(z.right)).coeff_at(cls.level - 1),
                        )
                descriptor = BaseNbhd(z, cls.level, exclude)
            assert nbhd_contains(descriptor, z)
            for t in closed_set:
                assert not nbhd_contains(descriptor, t)


def _scale(exp, coeff):
    value = ZERO
    for _ in range(coeff):
        value = value + omega_pow(exp)
    return value


def _dec(x):
    from bicyclic.ordinal import decrement_last

    return decrement_last(x)


def forced_would_cover(z, j, t):
    return _dec(z.left) <= t.left < z.left and _dec(z.right) <= t.right < z.right


# --- boxes ---------------------------------------------------------------------------


def test_uncovered_boxes_examples():
    s = spec(2, 2)
    assert uncovered_boxes(s, 1, 0).indices() == [(0, 0)]
    assert sorted(uncovered_boxes(s, 1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(NotALimitLevel):
        uncovered_boxes(spec(1, 2), 1, 0)
    with pytest.raises(NotALimitLevel):
        uncovered_boxes(spec(2, 3), 2, 1)


@pytest.mark.parametrize("j", [1, 2])
def test_uncovered_boxes_match_enumeration(j):
    sp = spec(j + 1, j + 1)
    corner = omega_pow(j)
    alpha = Ordinal(j + 1)
    residuals = list(enumerate_below_omega_pow(j - 1, 3))
    for n in range(4):
        square = uncovered_boxes(sp, j, n)
        d = BaseNbhd(BAlphaElement(alpha, corner, corner), j, n)
        for p in range(n + 3):
            for q in range(n + 3):
                box_members = [
                    BAlphaElement(alpha, _scale(j - 1, p) + g, _scale(j - 1, q) + dd)
                    for g in residuals
                    for dd in residuals
                ]
                inside = all(nbhd_contains(d, m) for m in box_members)
                assert inside == ((p, q) not in square)
                if max(p, q) > n:
                    assert nbhd_contains(
                        d, BAlphaElement(alpha, _scale(j - 1, p), _scale(j - 1, q))
                    )


# --- lattice ---------------------------------------------------------------------------


def test_finer_examples():
    out = topology_finer(spec(1, 2), spec(2, 2))
    assert out.relation == "strictly-finer"
    assert out.certificate == element(2, "w", "w")
    assert topology_finer(spec(2, 2), spec(2, 2)).relation == "equal"
    out = topology_finer(spec(2, "w"), spec("w", "w"))
    assert out.relation == "strictly-finer"
    assert out.certificate == element("w", "w^2", "w^2")
    assert topology_finer(spec(2, 2), spec(1, 2)).relation == "strictly-coarser"
    assert topology_finer(spec(1, 2), spec(1, 3)).relation == "incomparable-levels"


def test_certificates_separate_the_pair():
    for alpha in (2, 3):
        specs = enumerate_topologies(alpha)
        for s1, s2 in itertools.combinations(specs, 2):
            out = topology_finer(s1, s2)
            assert out.relation == "strictly-finer"
            assert classify_point(s1, out.certificate) == Isolated()
            assert isinstance(classify_point(s2, out.certificate), Limit)


def test_enumerate_examples():
    assert enumerate_topologies(1) == [spec(1, 1)]
    assert enumerate_topologies(3) == [spec(1, 3), spec(2, 3), spec(3, 3)]
    fam = enumerate_topologies("w", cap=4)
    assert fam[:2] == [spec(1, "w"), spec(2, "w")]
    assert fam[-1] == spec("w", "w")
    with pytest.raises(UnsupportedLevel):
        enumerate_topologies("w + 1")
    with pytest.raises(ValueError):
        enumerate_topologies("w")


def test_discreteness_at_index_one():
    rng = random.Random(3)
    for alpha in (1, 2, 3, OMEGA):
        sp = TopologySpec(Ordinal(1), Ordinal(alpha))
        for _ in range(100):
            assert classify_point(sp, rand_element(rng, alpha)) == Isolated()


# --- text form ---------------------------------------------------------------------------


def test_descriptor_text_round_trip():
    d = BaseNbhd(element(2, "w", "w"), 1, 3)
    assert format_descriptor(d) == "base((w, w); j=1; n=3)"
    assert parse_descriptor("base((w,w); j=1; n=3)", 2) == d
    s = Singleton(element(2, 5, 7))
    assert format_descriptor(s) == "sing((5, 7))"
    assert parse_descriptor("sing((5, 7))", 2) == s
    with pytest.raises(ParseError):
        parse_descriptor("ball((w,w); j=1; n=3)", 2)
    with pytest.raises(ParseError):
        parse_descriptor("base((w,w); j=1)", 2)


def test_iter_members_order_and_truncation():
    d = BaseNbhd(element(2, "w", "w"), 1, 2)
    members = list(iter_members(d, 4))
    assert members[0] == element(2, "w", "w")
    assert members[1] == element(2, 3, 0)  # right offset 0, first passing left offset
    assert all(m.left.coeff_at(0) <= 4 and m.right.coeff_at(0) <= 4 for m in members[1:])
    big_center = BaseNbhd(element(2, "w*9", "w"), 1, 0)
    assert list(iter_members(big_center, 4)) == []  # center and block coefficients exceed 4
