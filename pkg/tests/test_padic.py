import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_frames.padic import (
    GroupContext,
    PAdicRational,
    PrueferElement,
    Section,
    character,
    fractional_part,
    pruefer_add,
    section_decompose,
    valuation,
)

R = PAdicRational


@pytest.mark.parametrize("p, x, expected", [
    (2, R(2, 3, 2), -2),
    (3, R(3, 9), 2),
    (5, R(5, 7), 0),
    (3, R(3, 18, 1), 1),  # 18/3 = 6
])
def test_valuation(p, x, expected):
    assert valuation(x) == expected


def test_valuation_of_zero():
    with pytest.raises(ValueError, match="valuation of zero undefined"):
        valuation(R(2, 0))


def test_reduced_form():
    x = R(2, 12, 3)  # 12/8 = 3/2
    assert (x.numerator, x.exponent) == (3, 1)
    assert R(3, 0, 4) == R(3, 0)
    assert R.from_fraction(3, Fraction(10, 9)) == R(3, 10, 2)
    with pytest.raises(ValueError):
        R.from_fraction(3, Fraction(1, 2))


@pytest.mark.parametrize("p, x, expected", [
    (2, R(2, 3, 2), R(2, 3, 2)),
    (7, R(7, 40), R(7, 0)),
    (3, R(3, 10, 2), R(3, 1, 2)),
    (2, R(2, -1, 1), R(2, 1, 1)),
])
def test_fractional_part(p, x, expected):
    assert fractional_part(x) == expected


def test_character_values():
    assert character(R(5, 3), R(5, 7)) == 1
    # {1/2} = 1/2 -> e^{i pi}
    assert abs(character(R(2, 1, 1), R(2, 1)) - (-1)) < 1e-15
    # {1/3} -> e^{2 pi i / 3}
    assert abs(character(R(3, 1, 1), R(3, 1)) - cmath.exp(2j * cmath.pi / 3)) < 1e-15


def test_character_pairing_matches_dft_index():
    # {x_n gamma_j} = (n j mod N) / N for x_n = n/p^m, gamma_j = j/p^k
    p, m, k = 3, 2, 1
    N = p ** (m + k)
    for n, j in itertools.product(range(N), repeat=2):
        want = cmath.exp(2j * cmath.pi * ((n * j) % N) / N)
        assert abs(character(R(p, n, m), R(p, j, k)) - want) < 1e-13


def test_character_large_exponent_stays_exact():
    p = 2
    x = R(p, 2**60 + 1, 62)
    gamma = R(p, 2**2)
    # x * gamma = (2**60 + 1) / 2**60 -> fractional part 1/2**60
    assert abs(character(x, gamma) - cmath.exp(2j * cmath.pi / 2**60)) < 1e-15


def test_section_decompose_examples():
    ctx = GroupContext(2)
    canon = Section(ctx)
    assert section_decompose(R(2, 7), canon) == (R(2, 0), R(2, 7))
    assert section_decompose(R(2, 5, 2), canon) == (R(2, 1, 2), R(2, 1))
    shifted = Section(ctx, {R(2, 1, 2): R(2, 1)})
    assert section_decompose(R(2, 5, 2), shifted) == (R(2, 5, 2), R(2, 0))


def test_section_rejects_bad_offsets():
    ctx = GroupContext(3)
    with pytest.raises(ValueError):
        Section(ctx, {R(3, 1, 1): R(3, 1, 1)})  # offset not in Z_3
    with pytest.raises(ValueError):
        Section(ctx, {R(3, 4, 1): R(3, 1)})  # key not a canonical rep


@pytest.mark.parametrize("p, a, b, want", [
    (3, (1, 1), (1, 1), (2, 1)),
    (3, (1, 1), (2, 1), (0, 0)),
    (2, (1, 1), (1, 2), (3, 2)),
])
def test_pruefer_add(p, a, b, want):
    assert pruefer_add(PrueferElement(p, *a), PrueferElement(p, *b)) == PrueferElement(p, *want)


def test_pruefer_prime_mismatch():
    with pytest.raises(ValueError):
        pruefer_add(PrueferElement(2, 1, 1), PrueferElement(3, 1, 1))


@pytest.mark.parametrize("p", [2, 3])
def test_pruefer_group_axioms_exhaustive(p):
    elems = {PrueferElement(p, r, lev) for lev in range(4) for r in range(p**lev)}
    zero = PrueferElement(p, 0, 0)
    for a in elems:
        assert a + (-a) == zero
        for b in elems:
            assert a + b == b + a
    small = [e for e in elems if e.level <= 2]
    for a, b, c in itertools.product(small, repeat=3):
        assert (a + b) + c == a + (b + c)


def test_serialisation_roundtrip():
    x = R(3, -5, 2)
    assert R.parse(3, str(x)) == x
    assert R.parse(3, x.to_json()) == x
    assert R.parse(3, "7") == R(3, 7)
    with pytest.raises(ValueError):
        R.parse(3, "1/2^1")
    b = PrueferElement(5, 7, 2)
    assert PrueferElement.parse(5, b.to_json()) == b


def test_context_validation():
    with pytest.raises(ValueError):
        GroupContext(4)
    assert GroupContext(2).max_level == 12
    assert GroupContext(3).max_level == 7


points = st.builds(lambda n, e: (n, e), st.integers(-10**6, 10**6), st.integers(0, 8))


@given(st.sampled_from([2, 3, 5, 7]), points, points, points)
def test_character_is_additive_in_gamma(p, x, g1, g2):
    x, g1, g2 = R(p, *x), R(p, *g1), R(p, *g2)
    lhs = character(x, g1 + g2)
    rhs = character(x, g1) * character(x, g2)
    assert abs(lhs - rhs) < 1e-12


@given(st.sampled_from([2, 3, 5]), points, st.integers(-10**9, 10**9))
def test_fractional_part_integer_shift(p, x, n):
    x = R(p, *x)
    assert fractional_part(x + n) == fractional_part(x)
    fx = fractional_part(x)
    assert 0 <= fx.to_fraction() < 1
    assert (x - fx).in_zp()


@given(st.sampled_from([2, 3, 5]), points,
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 80), st.integers(-40, 40)), max_size=5))
def test_section_decompose_eta_integral(p, gamma, raw):
    ctx = GroupContext(p)
    offsets = {R(p, r % p**lev, lev): R(p, d) for lev, r, d in raw}
    section = Section(ctx, offsets)
    gamma = R(p, *gamma)
    sigma, eta = section_decompose(gamma, section)
    assert sigma + eta == gamma
    assert eta.is_zero() or valuation(eta) >= 0
