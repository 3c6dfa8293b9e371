#!/usr/bin/env python3
"""Energy is multiplicative across coordinatewise products.

Quadruple identities in a product split coordinate by coordinate, so
E(U x V) = E(U) E(V).  Consequences explored here: the energies of factor
products over {0,1,2}^n are exactly the numbers 15^r 19^s 6^k, the boolean
cube pins the largest possible exponent log E / log |A| at log2(6), and a
run of same-size products can be chained so consecutive energy ratios stay
below 1 + 360/w^3.
"""

from fractions import Fraction
from itertools import product as iproduct

from addenergy import (
    cube_energy_exponent,
    min_ratio_empirical,
    product_energy,
    product_energy_oracle,
    product_set,
    ratio_chain,
)

print("=" * 72)
print("Multiplicativity, checked extensionally")
print("=" * 72)
for factors in ([[0, 1], [0, 1]], [[0, 1, 3], [0, 1]], [[0, 1, 3], [0, 1, 3], [0, 1]]):
    p = product_set(factors)
    fast, slow = product_energy(p), product_energy_oracle(p)
    assert fast == slow
    print(f"  factors {factors!s:<34} E = {fast} (materialized count agrees)")

print()
print("Three-element factors over {0,1,2} have energy 15 or 19; two-element")
print("factors give 6.  Products therefore realize exactly 15^r 19^s 6^k:")
seen = set()
for sizes in iproduct((2, 3), repeat=3):
    for e in iproduct(*[[15, 19] if s == 3 else [6] for s in sizes]):
        v = e[0] * e[1] * e[2]
        seen.add(v)
print(f"  dimension 3 energies with factor sizes in {{2,3}}: {sorted(seen)}")

print()
print("=" * 72)
print("Boolean cube exponent")
print("=" * 72)
for k in (1, 2, 3):
    rep = cube_energy_exponent(k)
    print(f"  {{0,1}}^{k}: full-cube energy {rep.cube_energy} = 6^{k}; exhaustive "
          f"max of log E/log|A| = {rep.max_exponent:.6f} <= log2(6) = "
          f"{rep.exponent_limit:.6f}")

print()
print("=" * 72)
print("Ratio chain: same cardinality, consecutive energies, ratios -> 1")
print("=" * 72)
chain = ratio_chain(12, 3)
print(f"  w = {chain.w}, dimension {chain.n}: {len(chain.sets)} products of size "
      f"{chain.sets[0].size} = {chain.w}^{chain.n}")
print(f"  factor energies {chain.factor_energies[0]}..{chain.factor_energies[-1]} "
      f"in steps of 4; first miss at {chain.misses[0]}")
worst = max(chain.ratios)
print(f"  worst consecutive ratio {worst} = {float(worst):.6f} "
      f"<= bound {chain.ratio_bound} = {float(chain.ratio_bound):.6f}")

print()
print("Exhaustive minimum ratio for 3-element factors over a 4-letter alphabet:")
res = min_ratio_empirical(4, 3, 2)
print(f"  factor energies {res.factor_energies}, products {res.products}")
print(f"  min consecutive ratio = {res.min_ratio} (exactly 19/15)")
assert res.min_ratio == Fraction(19, 15)
