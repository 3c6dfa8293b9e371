#!/usr/bin/env python3
"""How dense can a group subset be at a given energy level?

Write |A| = |G|^alpha and E(A) = |A|^(2+delta).  Cauchy-Schwarz on the
representation function forces alpha <= 1/(2-delta).  Mixing k Sidon
factors (parabolas over Z_p x Z_p, energy 2p^2-p) with n-k full factors
(energy M^3) walks along that curve, and the gap to it shrinks as the
prime grows.
"""

import random

import mpmath

from addenergy import (
    GroupSet,
    GroupSpec,
    cauchy_bound_check,
    density_curve,
    group_energy,
    is_sidon,
    sidon_parabola,
    sum_profile,
)

rng = random.Random(5)

print("=" * 72)
print("Parabola Sidon sets {(x, x^2)} over Z_p x Z_p")
print("=" * 72)
for p in (3, 5, 7, 11, 13):
    s = sidon_parabola(p)
    e = group_energy(s)
    print(f"  p = {p:>2}: |S| = {len(s):>2} = sqrt(|G|), Sidon: {is_sidon(s)}, "
          f"E = {e} = 2p^2 - p")

print()
print("Representation profile of the p = 5 set (r <= 2 everywhere):")
prof = sum_profile(sidon_parabola(5))
print(f"  sums hit once: {sum(1 for r in prof.values() if r == 1)}, "
      f"twice: {sum(1 for r in prof.values() if r == 2)}, "
      f"|S+S| = {len(prof)}")

print()
print("=" * 72)
print("Cauchy bound |A|^4 <= |A+A| * E(A), exact integers")
print("=" * 72)
for _ in range(4):
    spec = GroupSpec(tuple(rng.randint(2, 9) for _ in range(rng.randint(1, 2))))
    pool = list(spec.elements())
    a = GroupSet.of(spec, rng.sample(pool, rng.randint(2, min(len(pool), 12))))
    prof = sum_profile(a)
    e = group_energy(a)
    print(f"  orders {spec.orders}: |A|^4 = {len(a)**4:>8} <= "
          f"|A+A| * E = {len(prof) * e:>8}   holds: {cauchy_bound_check(a)}")

print()
print("=" * 72)
print("Density curve: alpha vs 1/(2-delta), gap shrinking in p")
print("=" * 72)
n = 4
header = f"  {'k':>2} {'alpha':>7}"
for p in (5, 101, 1009):
    header += f"  gap@p={p:<6}"
print(header)
curves = {p: density_curve(n, p) for p in (5, 101, 1009)}
with mpmath.workdps(8):
    for k in range(n + 1):
        row = f"  {k:>2} {str(curves[5][k].alpha):>7}"
        for p in (5, 101, 1009):
            row += f"  {mpmath.nstr(curves[p][k].bound_gap, 4):>10}"
        print(row)
print()
print("At k = 0 (the full group) the gap is identically zero; for every")
print("other k it is positive and strictly decreasing in p.")
