"""Group energies, Sidon sets, and the density-energy tradeoff."""

import random
from fractions import Fraction

import mpmath
import pytest

from addenergy import (
    GroupSet,
    GroupSpec,
    cauchy_bound_check,
    density_curve,
    group_energy,
    group_product,
    is_sidon,
    sidon_energy,
    sidon_parabola,
    sum_profile,
    sumset,
    tradeoff_point,
)


def random_group_set(rng, max_factors=3, max_order=9, max_size=20):
    spec = GroupSpec(tuple(rng.randint(2, max_order)
                           for _ in range(rng.randint(1, max_factors))))
    pool = list(spec.elements())
    k = rng.randint(1, min(len(pool), max_size))
    return GroupSet.of(spec, rng.sample(pool, k))


# ---------------------------------------------------------------------------
# energy and profiles
# ---------------------------------------------------------------------------

def test_group_energy_examples():
    assert group_energy(GroupSet.full(GroupSpec((3,)))) == 27
    assert group_energy(GroupSet.of(GroupSpec((7, 7)), [(0, 0)])) == 1
    # 8 is 0 mod 4 while |A| = 2: the mod-4 congruence is integers-only
    assert group_energy(GroupSet.full(GroupSpec((2,)))) == 8


def test_full_group_energy_is_cubed():
    for m in range(2, 20):
        assert group_energy(GroupSet.full(GroupSpec((m,)))) == m**3
    assert group_energy(GroupSet.full(GroupSpec((4, 5)))) == 20**3


def test_profile_identities():
    rng = random.Random(4001)
    for _ in range(60):
        a = random_group_set(rng)
        prof = sum_profile(a)
        assert sum(prof.values()) == len(a) ** 2
        assert sum(r * r for r in prof.values()) == group_energy(a)
        assert set(prof) == sumset(a)


def test_group_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec((1, 3))
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSet.of(GroupSpec((3,)), [(5,)])
    with pytest.raises(ValueError):
        group_energy(GroupSet.full(GroupSpec((200, 200)), cap=10**6), cap=100)


# ---------------------------------------------------------------------------
# Sidon sets
# ---------------------------------------------------------------------------

def test_is_sidon_examples():
    assert is_sidon(GroupSet.of(GroupSpec((5,)), [(0,), (1,)]))
    assert not is_sidon(GroupSet.full(GroupSpec((5,))))
    assert is_sidon(sidon_parabola(5))
    # doubles may coincide in 2-torsion: {0,1} in Z_2 has 0+0 = 1+1
    assert not is_sidon(GroupSet.of(GroupSpec((2,)), [(0,), (1,)]))


def test_parabola_suite():
    for p in (3, 5, 7, 11, 13):
        s = sidon_parabola(p)
        assert len(s) == p
        assert is_sidon(s)
        assert group_energy(s) == sidon_energy(p) == 2 * p * p - p


def test_parabola_smallest_case():
    assert sorted(sidon_parabola(3).elements) == [(0, 0), (1, 1), (2, 1)]


def test_parabola_rejects_bad_p():
    for bad in (2, 9, 15, 1):
        with pytest.raises(ValueError):
            sidon_parabola(bad)


def test_brute_force_quadruple_definition():
    # Sidon means s1+s2 = s3+s4 forces {s1,s2} = {s3,s4}
    s = sidon_parabola(5)
    add = s.group.add
    els = sorted(s.elements)
    for a in els:
        for b in els:
            for c in els:
                for d in els:
                    if add(a, b) == add(c, d):
                        assert {a, b} == {c, d}


# ---------------------------------------------------------------------------
# Cauchy bound
# ---------------------------------------------------------------------------

def test_cauchy_examples():
    assert cauchy_bound_check(GroupSet.of(GroupSpec((7,)), [(3,)]))
    full = GroupSet.full(GroupSpec((9,)))
    assert cauchy_bound_check(full)
    # equality case: |A|^4 = M^4 = |A+A| * E = M * M^3
    assert len(sumset(full)) * group_energy(full) == len(full) ** 4
    s5 = sidon_parabola(5)
    assert len(sumset(s5)) == 15 and group_energy(s5) == 45
    assert 5**4 <= 15 * 45
    assert cauchy_bound_check(s5)


def test_cauchy_random_sweep():
    rng = random.Random(4002)
    for _ in range(200):
        assert cauchy_bound_check(random_group_set(rng))


# ---------------------------------------------------------------------------
# group products and multiplicativity
# ---------------------------------------------------------------------------

def test_group_product_multiplicativity():
    rng = random.Random(4003)
    for _ in range(25):
        a = random_group_set(rng, max_factors=2, max_order=6, max_size=8)
        b = random_group_set(rng, max_factors=1, max_order=6, max_size=8)
        ab = group_product(a, b)
        assert len(ab) == len(a) * len(b)
        assert group_energy(ab) == group_energy(a) * group_energy(b)


def test_tradeoff_materialized_cross_check():
    # small enough to materialize: k Sidon factors times full factors
    for p in (3, 5):
        s = sidon_parabola(p)
        g = GroupSet.full(GroupSpec((p, p)))
        for k, parts in [(0, (g, g)), (1, (s, g)), (2, (s, s))]:
            point = tradeoff_point(k, 2, p)
            prod = group_product(*parts)
            assert len(prod) == point.set_size
            assert group_energy(prod) == point.energy


# ---------------------------------------------------------------------------
# tradeoff points and the density curve
# ---------------------------------------------------------------------------

def test_tradeoff_endpoints():
    pt = tradeoff_point(0, 3, 7)
    assert pt.alpha == 1
    assert pt.delta == 1  # full group: E = |A|^3 exactly
    assert pt.bound_gap == 0

    pt = tradeoff_point(2, 2, 5)
    assert pt.alpha == Fraction(1, 2)
    assert pt.set_size == 25 and pt.energy == 45**2


def test_tradeoff_k1_example():
    pt = tradeoff_point(1, 2, 5)
    assert pt.alpha == Fraction(3, 4)
    assert pt.set_size == 125 and pt.energy == 45 * 25**3
    # 4*alpha <= 1 + alpha*(2+delta), exact integer form
    assert pt.set_size**4 <= (5 * 5) ** 2 * pt.energy


def test_density_gap_shrinks_with_p():
    curves = {p: density_curve(4, p) for p in (5, 101, 1009)}
    for k in (1, 2, 3):
        gaps = [curves[p][k].bound_gap for p in (5, 101, 1009)]
        assert gaps[0] > gaps[1] > gaps[2]
        for g in gaps:
            assert g > 0


def test_density_curve_structure():
    points = density_curve(3, 11)
    assert [pt.k for pt in points] == [0, 1, 2, 3]
    for pt in points:
        assert 0 < pt.alpha <= 1
        assert 0 <= pt.delta <= 1
        # alpha stays below the limiting curve 1/(2-delta)
        assert mpmath.mpf(pt.alpha.numerator) / pt.alpha.denominator \
            <= pt.curve_value() + mpmath.mpf("1e-90")
    with pytest.raises(ValueError):
        density_curve(65, 7)
    with pytest.raises(ValueError):
        density_curve(4, 10007)
    with pytest.raises(ValueError):
        tradeoff_point(3, 2, 5)
