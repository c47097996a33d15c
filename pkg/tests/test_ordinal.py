"""Ordinal arithmetic: frozen examples, independent oracles, axioms."""

import random

import pytest

from bicyclic.errors import OutOfRange, ParseError, SubtrahendTooLarge, ZeroOrdinal
from bicyclic.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    compare,
    decrement_last,
    enumerate_below_omega_pow,
    format_ordinal,
    is_canonical,
    last_term,
    modified_split,
    omega_pow,
    parse_ordinal,
)

O = Ordinal


# --- oracles -----------------------------------------------------------------


def fold_add_terms(x, y):
    """Addition oracle: fold y into x one omega-power at a time.

    Each single step x + w**e is forced: it erases the tail of x below e and
    bumps the coefficient at e.  Works on term lists so it never touches the
    library's addition.
    """
    terms = list(x.terms)
    for e, c in y.terms:
        for _ in range(c):
            kept = [(ex, cx) for ex, cx in terms if ex > e]
            merged = [cx for ex, cx in terms if ex == e]
            terms = kept + [(e, (merged[0] if merged else 0) + 1)]
    return tuple(terms)


def sub_candidates(a, b, max_exp, max_coeff):
    """Subtraction oracle: every bounded c with b + c == a."""
    return [c for c in enumerate_below_omega_pow(max_exp, max_coeff) if b + c == a]


def test_fold_oracle_single_step():
    x = O("w^2*2 + w*3 + 5")
    assert fold_add_terms(x, OMEGA) == tuple(O("w^2*2 + w*4").terms)


# --- comparison ----------------------------------------------------------------


def test_compare_examples():
    x = O("w^3 + w*2 + 1")
    assert compare(x, x) == 0
    assert compare(O("w + 5"), O("w*2")) == -1
    assert compare(O("w^(w)"), O("w^5*9")) == 1


def test_total_order_small_grid():
    grid = list(enumerate_below_omega_pow(3, 2))
    for x in grid:
        assert not x < x
        for y in grid:
            assert (x < y) + (x == y) + (x > y) == 1
    assert sorted(grid) == grid  # enumeration order is the ordinal order


def test_order_transitive_sampled():
    rng = random.Random(5)
    pool = list(enumerate_below_omega_pow(3, 3))
    for _ in range(2000):
        x, y, z = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        if x < y and y < z:
            assert x < z


# --- addition -------------------------------------------------------------------


def test_add_left_identity():
    assert ZERO + O("w^2*3 + 5") == O("w^2*3 + 5")


def test_add_absorbs_finite_tail():
    assert O("w + 1") + OMEGA == O("w*2")


def test_add_derived_example():
    x, y = O("w^2*2 + w*3 + 5"), O("w*4 + 1")
    frozen = O("w^2*2 + w*7 + 1")
    assert fold_add_terms(x, y) == tuple(frozen.terms)
    assert x + y == frozen


def test_add_matches_fold_oracle_random():
    rng = random.Random(11)
    pool = list(enumerate_below_omega_pow(3, 4))
    for _ in range(500):
        x, y = rng.choice(pool), rng.choice(pool)
        assert tuple((x + y).terms) == fold_add_terms(x, y)


def test_add_associative_sampled():
    rng = random.Random(7)
    pool = list(enumerate_below_omega_pow(3, 3))
    for _ in range(2000):
        x, y, z = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert (x + y) + z == x + (y + z)


def test_add_monotone():
    pool = list(enumerate_below_omega_pow(2, 4))
    for x in pool:
        for y in pool:
            for z in pool:
                if y < z:
                    assert x + y < x + z
                if x <= y:
                    assert x + z <= y + z
                break  # z loop only needs one representative per (x, y)
    # dedicated strictness probes
    assert OMEGA + 1 > OMEGA
    assert O("w^2") + OMEGA > O("w^2")


# --- subtraction ----------------------------------------------------------------


def test_sub_self_is_zero():
    x = O("w^2 + w*4 + 9")
    assert x - x == ZERO


def test_sub_derived_unique_candidate():
    a, b = O("w*2 + 3"), OMEGA
    hits = sub_candidates(a, b, max_exp=2, max_coeff=5)
    assert hits == [O("w + 3")]
    assert a - b == hits[0]


def test_sub_derived_absorption_case():
    a, b = O("w^2"), O("w*5 + 2")
    hits = sub_candidates(a, b, max_exp=3, max_coeff=3)
    assert hits == [O("w^2")]
    assert a - b == hits[0]


def test_sub_inverse_random():
    rng = random.Random(13)
    pool = list(enumerate_below_omega_pow(3, 4))
    for _ in range(2000):
        b, c = rng.choice(pool), rng.choice(pool)
        a = b + c
        assert b + (a - b) == a
        assert a - b == c


def test_sub_rejects_larger():
    with pytest.raises(SubtrahendTooLarge):
        OMEGA - O("w*2")
    with pytest.raises(SubtrahendTooLarge):
        O(3) - O(4)


# --- omega powers and splits ------------------------------------------------------


def test_omega_pow():
    assert omega_pow(0) == ONE
    assert omega_pow(1) == OMEGA
    assert omega_pow(OMEGA) == O("w^(w)")


def test_modified_split_examples():
    assert modified_split(ZERO, 3) == (0, ZERO)
    assert modified_split(O("w^2*2 + w*3 + 1"), 2) == (2, O("w*3 + 1"))
    assert modified_split(O("w*7"), 2) == (0, O("w*7"))


def test_modified_split_rejects_large():
    with pytest.raises(OutOfRange):
        modified_split(O("w^3"), 2)


def test_modified_split_reassembles():
    rng = random.Random(3)
    pool = list(enumerate_below_omega_pow(3, 4))
    for _ in range(500):
        x = rng.choice(pool)
        head, tail = modified_split(x, 2)
        assert _scale(2, head) + tail == x
        assert tail < omega_pow(2)


def _scale(exp, coeff):
    value = ZERO
    for _ in range(coeff):
        value = value + omega_pow(exp)
    return value


def test_last_term_and_decrement():
    assert last_term(O("w^2*2 + w*3 + 5")) == (ZERO, 5)
    assert last_term(O("w^3*4")) == (O(3), 4)
    assert last_term(ZERO) is None
    assert decrement_last(O("w*3 + 4")) == O("w*3 + 3")
    assert decrement_last(O("w^2")) == ZERO
    assert decrement_last(O("w^3*2 + w^2")) == O("w^3*2")
    with pytest.raises(ZeroOrdinal):
        decrement_last(ZERO)


# --- grammar ---------------------------------------------------------------------


def test_parse_examples():
    x = parse_ordinal("w^2*3 + w + 4")
    assert [(int(e), c) for e, c in x.terms] == [(2, 3), (1, 1), (0, 4)]
    assert parse_ordinal("0") == ZERO
    assert parse_ordinal("1 + w") == OMEGA


def test_parse_normalizes_arbitrary_sums():
    assert parse_ordinal("w + w") == O("w*2")
    assert parse_ordinal("w*2 + 3 + w") == O("w*3")
    assert parse_ordinal("w^(1 + w)") == O("w^(w)")


def test_format_examples():
    assert format_ordinal(ZERO) == "0"
    assert format_ordinal(OMEGA) == "w"
    assert format_ordinal(O("w^(w + 1)*2 + 3")) == "w^(w + 1)*2 + 3"
    assert format_ordinal(omega_pow(OMEGA)) == "w^(w)"


@pytest.mark.parametrize(
    "bad, pos",
    [("w^", 2), ("", 0), ("3 +", 3), ("w*", 2), ("w^(w", 4), ("5x", 1), ("(w)", 0)],
)
def test_parse_errors_carry_position(bad, pos):
    with pytest.raises(ParseError) as err:
        parse_ordinal(bad)
    assert err.value.position == pos


def test_round_trip_random():
    rng = random.Random(23)
    pool = list(enumerate_below_omega_pow(4, 3))
    for _ in range(800):
        x = rng.choice(pool) + rng.choice(pool)
        assert parse_ordinal(format_ordinal(x)) == x
    nested = omega_pow(O("w*2 + 3")) + omega_pow(OMEGA + 1) + O("w^4*7 + 2")
    assert parse_ordinal(format_ordinal(nested)) == nested


def test_canonicity_closure():
    rng = random.Random(29)
    pool = list(enumerate_below_omega_pow(3, 5))
    for _ in range(800):
        x, y = rng.choice(pool), rng.choice(pool)
        assert is_canonical(x + y)
        if y <= x:
            assert is_canonical(x - y)
    assert is_canonical(omega_pow(OMEGA + 2) + 5)


def test_int_and_bool_conversions():
    assert int(O(17)) == 17
    assert not ZERO
    assert OMEGA
    with pytest.raises(OverflowError):
        int(OMEGA)


def test_hashable_and_usable_in_sets():
    assert len({O("w + 1"), O("w + 1"), O("w*2")}) == 2
