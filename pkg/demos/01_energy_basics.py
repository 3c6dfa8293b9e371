#!/usr/bin/env python3
"""Tour of the exact energy primitives.

Counts the additive energy of small sets by three independent routes,
then demonstrates the invariances the rest of the toolkit leans on:
affine maps, the mod-4 congruence, and the n^2 <= E <= n^3 bounds.
"""

import random

from addenergy import (
    IntSet,
    affine_image,
    difference_profile,
    energy_by_quadruples,
    energy_from_profile,
    energy_oracle,
    incremental_energy_extend,
    max_energy,
    normalize,
)

rng = random.Random(1)

print("=" * 72)
print("Three mutually checking energy routes")
print("=" * 72)
for elements in ([0, 1], [0, 1, 3], [0, 1, 2], [1, 2, 3, 10], [0, 3, 7, 12, 20]):
    a = IntSet(elements)
    by_sums = energy_oracle(a)
    by_profile = energy_from_profile(difference_profile(a))
    by_quadruples = energy_by_quadruples(a)
    print(f"  A = {list(a)!s:<24} E = {by_sums:>4}  "
          f"(profile route {by_profile}, quadruple loop {by_quadruples})")

print()
print("Appending one element past the maximum costs 4n + 4*sum(t_j) + 1:")
a = IntSet([1, 2, 3])
e = energy_oracle(a)
for new in (4, 10):
    extended = incremental_energy_extend(a, e, new)
    print(f"  E({list(a)} + [{new}]) = {extended} "
          f"(recount: {energy_oracle(IntSet(list(a) + [new]))})")

print()
print("=" * 72)
print("Progressions maximize: E({1..n}) = n^2 + (n-1)n(2n-1)/3")
print("=" * 72)
for n in (2, 3, 5, 10, 50):
    assert energy_oracle(range(1, n + 1)) == max_energy(n)
    print(f"  n = {n:>3}: max energy {max_energy(n)}")

print()
print("=" * 72)
print("Invariances on random sets")
print("=" * 72)
for _ in range(5):
    a = IntSet(rng.sample(range(-10**6, 10**6), rng.randint(3, 12)))
    e = energy_oracle(a)
    image = affine_image(a, rng.choice([-3, 2, 7]), rng.randint(-999, 999))
    print(f"  |A| = {len(a):>2}  E = {e:>6}  E mod 4 = {e % 4} (= |A| mod 4: {len(a) % 4})"
          f"  affine image E = {energy_oracle(image)}")
    assert energy_oracle(image) == e
    assert len(a) ** 2 <= e <= len(a) ** 3
    assert normalize(image) == normalize(a)

print()
print("Orbit canonical forms: {10,20,40} and {5,6,8} both normalize to",
      list(normalize([10, 20, 40])))
