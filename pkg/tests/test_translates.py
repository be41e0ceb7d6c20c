import itertools

import numpy as np
import pytest

from padic_frames import GroupContext, Section
from padic_frames.fourier import fourier, inverse_fourier
from padic_frames.oracle import random_section, random_stepfunction
from padic_frames.padic import PAdicRational, PrueferElement, character, pruefer_add, section_decompose
from padic_frames.stepfn import StepFunction, indicator, norm, refine
from padic_frames.translates import pointwise_shift, translate, w_symbol, w_table

from conftest import offset_section

R = PAdicRational
P = PrueferElement


def test_w_symbol_examples():
    ctx = GroupContext(2)
    C = Section(ctx)
    for g in [R(2, 1), R(2, 3, 2), R(2, -7, 1)]:
        assert w_symbol(P(2, 0), C, g) == 1
    assert abs(w_symbol(P(2, 1, 1), C, R(2, 1)) - (-1)) < 1e-15
    # gamma already a section element -> eta = 0
    assert w_symbol(P(2, 3, 2), C, R(2, 1, 2)) == 1


def test_w_table_matches_w_symbol(rng):
    ctx = GroupContext(3)
    section = random_section(ctx, rng)
    b = P(3, 5, 2)
    k, m = 2, 3
    table = w_table(b, section, k, m)
    for j in range(3 ** (k + m)):
        assert abs(table[j] - w_symbol(b, section, R(3, j, k))) < 1e-12


def test_translate_by_zero_is_identity(ctx, rng):
    f = random_stepfunction(ctx, rng, max_total=3)
    assert translate(f, P(ctx.p, 0), Section(ctx)) is f


def test_translate_indicator_is_shift():
    ctx = GroupContext(2)
    got = translate(indicator(ctx, 0), P(2, 1, 1), Section(ctx))
    want = pointwise_shift(indicator(ctx, 0), R(2, 1, 1))
    assert got.allclose(want)
    assert got.allclose(indicator(ctx, "1/2^1"))


def test_translate_p3_composition(rng):
    ctx = GroupContext(3)
    C = Section(ctx)
    for _ in range(5):
        f = random_stepfunction(ctx, rng, max_total=3)
        third = P(3, 1, 1)
        lhs = translate(translate(f, third, C), third, C)
        assert lhs.allclose(translate(f, P(3, 2, 1), C), atol=1e-12)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_group_law_random_pairs(p, rng):
    ctx = GroupContext(p)
    worst = 0.0
    for t in range(100):
        f = random_stepfunction(ctx, rng, max_total=3)
        section = Section(ctx) if t % 2 else random_section(ctx, rng)
        a = P(p, int(rng.integers(0, p**2)), int(rng.integers(0, 3)))
        b = P(p, int(rng.integers(0, p**2)), int(rng.integers(0, 3)))
        lhs = translate(translate(f, a, section), b, section)
        rhs = translate(f, pruefer_add(a, b), section)
        worst = max(worst, float(np.max(np.abs((lhs - rhs).coeffs))))
        assert abs(norm(translate(f, b, section)) - norm(f)) <= 1e-12 * norm(f)
    assert worst <= 1e-12


def test_faithful(ctx):
    # fhat nowhere zero on its support: a unit-modulus random phase pattern
    p = ctx.p
    phases = np.exp(2j * np.pi * np.random.default_rng(1).random(p**2))
    f = inverse_fourier(StepFunction(ctx, 0, 2, phases))  # fhat supported on Z_p, level 2
    C = Section(ctx)
    elems = [P(p, r, lev) for lev in range(3) for r in range(p**lev)]
    elems = list(dict.fromkeys(elems))
    images = [translate(f, x, C) for x in elems]
    for (x, fx), (y, fy) in itertools.combinations(zip(elems, images), 2):
        assert not fx.allclose(fy, atol=1e-6), (x, y)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("offsets", [[], [((0, 0), 1), ((1, 1), 3), ((1, 2), 2)]])
def test_character_indicator_translate_identity(p, offsets):
    ctx = GroupContext(p)
    C = offset_section(ctx, offsets)
    pts = {R(p, r, lev) for lev in range(3) for r in range(p**lev)}
    worst = 0.0
    for a, beta in itertools.product(sorted(pts, key=R.to_fraction), repeat=2):
        f = indicator(ctx, a, 0, beta)
        sigma_beta, _ = section_decompose(beta, C)
        for bt in pts:
            b = P.from_point(bt)
            got = translate(f, b, C)
            for rep in (bt, bt + 1, bt - 2 * p):
                phase = character(rep, sigma_beta)
                want = phase * pointwise_shift(f, rep)
                g, w = got, want
                m, k = max(g.m, w.m), max(g.k, w.k)
                diff = np.abs(refine(g, m, k).coeffs - refine(w, m, k).coeffs)
                worst = max(worst, float(diff.max()))
    assert worst <= 1e-12


def test_section_dependence_is_a_frequency_phase(rng):
    ctx = GroupContext(3)
    canon = Section(ctx)
    other = offset_section(ctx, [((0, 0), 2), ((1, 1), 1), ((2, 1), 4), ((4, 2), 7)])
    f = random_stepfunction(ctx, rng, m=1, k=2)
    b = P(3, 7, 2)
    t_can = translate(f, b, canon)
    t_off = translate(f, b, other)
    F_can, F_off = fourier(t_can), fourier(t_off)
    assert F_can.resolution == F_off.resolution
    for j, (u, v) in enumerate(zip(F_can.coeffs, F_off.coeffs)):
        gamma = R(3, j, F_can.m)
        ratio = w_symbol(b, other, gamma) / w_symbol(b, canon, gamma)
        assert abs(v - ratio * u) < 1e-12
    assert not t_can.allclose(t_off, atol=1e-6)


def test_pointwise_shift_examples(ctx, rng):
    f = random_stepfunction(ctx, rng, max_total=2)
    assert pointwise_shift(f, R(ctx.p, 0)).allclose(f)
    b = R(ctx.p, 1, 2)
    twice = pointwise_shift(pointwise_shift(f, b), b)
    assert twice.allclose(pointwise_shift(f, b + b))
    # point values: (shift f)(x) = f(x - b)
    g = pointwise_shift(f, b)
    for n in range(len(g.coeffs)):
        x = g.point(n)
        assert g(x) == f(x - b)


def test_translate_overflow():
    ctx = GroupContext(2, max_level=3)
    f = StepFunction(ctx, 0, 2, [1, 2, 3, 4])
    with pytest.raises(ValueError, match="resolution overflow"):
        translate(f, P(2, 1, 2), Section(ctx))
