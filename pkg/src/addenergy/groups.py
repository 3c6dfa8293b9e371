"""Additive energy over finite abelian groups and the density tradeoff.

Groups are direct products of cyclic groups; elements are residue vectors.
The representation profile r(x) counts ordered pairs summing to x, with
sum r = |A|^2 and sum r^2 = E(A).  A Sidon set (all pair sums distinct)
minimizes energy at exactly 2|S|^2 - |S| in odd-order groups; the parabola
{(x, x^2)} over a prime field realizes |S| = sqrt(|G|) exactly.  Mixing k
Sidon factors with n-k full factors trades density against energy along the
curve alpha ~ 1/(2 - delta), bounded by |A|^4 <= |A+A| * E(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import mpmath

from .intset import _as_intset

GROUP_ENERGY_CAP = 10_000
SIDON_CHECK_CAP = 1_000
_REPORT_DPS = 100


@dataclass(frozen=True)
class GroupSpec:
    """Direct product of cyclic groups of the given orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(m < 2 for m in self.orders):
            raise ValueError("cyclic orders must all be >= 2")

    @property
    def order(self) -> int:
        out = 1
        for m in self.orders:
            out *= m
        return out

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def contains(self, x: tuple[int, ...]) -> bool:
        return len(x) == len(self.orders) and all(0 <= a < m for a, m in zip(x, self.orders))

    def elements(self):
        return product(*(range(m) for m in self.orders))


@dataclass(frozen=True)
class GroupSet:
    """Subset of a finite abelian group, as a frozenset of residue vectors."""

    group: GroupSpec
    elements: frozenset

    def __post_init__(self):
        for x in self.elements:
            if not self.group.contains(x):
                raise ValueError(f"{x} is not a valid residue vector")

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def of(cls, group: GroupSpec, elements) -> "GroupSet":
        return cls(group, frozenset(tuple(int(c) for c in x) for x in elements))

    @classmethod
    def full(cls, group: GroupSpec, cap: int = GROUP_ENERGY_CAP) -> "GroupSet":
        if group.order > cap:
            raise ValueError(f"group order {group.order} exceeds the cap {cap}")
        return cls(group, frozenset(group.elements()))


def sum_profile(a: GroupSet, cap: int = GROUP_ENERGY_CAP) -> dict:
    """r(x) = number of ordered pairs of A summing to x."""
    if len(a) > cap:
        raise ValueError(f"set size {len(a)} exceeds the cap {cap}")
    add = a.group.add
    els = sorted(a.elements)
    prof: dict = {}
    for i, x in enumerate(els):
        s = add(x, x)
        prof[s] = prof.get(s, 0) + 1
        for y in els[i + 1:]:
            s = add(x, y)
            prof[s] = prof.get(s, 0) + 2
    return prof


def group_energy(a: GroupSet, cap: int = GROUP_ENERGY_CAP) -> int:
    """E(A) under the group addition, via the representation profile."""
    return sum(r * r for r in sum_profile(a, cap).values())


def sumset(a: GroupSet, cap: int = GROUP_ENERGY_CAP) -> frozenset:
    return frozenset(sum_profile(a, cap))


def is_sidon(a: GroupSet, cap: int = SIDON_CHECK_CAP) -> bool:
    """True iff all sums of unordered pairs (doubles included) are distinct."""
    if len(a) > cap:
        raise ValueError(f"set size {len(a)} exceeds the cap {cap}")
    add = a.group.add
    els = sorted(a.elements)
    seen = set()
    for i, x in enumerate(els):
        for y in els[i:]:
            s = add(x, y)
            if s in seen:
                return False
            seen.add(s)
    return True


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def sidon_parabola(p: int) -> GroupSet:
    """The Sidon set {(x, x^2 mod p)} in Z_p x Z_p, of size exactly sqrt(|G|).

    Pair sums determine (x1+x2, x1^2+x2^2) and hence the unordered pair
    {x1, x2} in odd characteristic, so all pair sums are distinct.
    """
    if not _is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    spec = GroupSpec((p, p))
    return GroupSet(spec, frozenset((x, x * x % p) for x in range(p)))


def sidon_energy(size: int) -> int:
    """Energy of a Sidon set in an odd-order group: 2|S|^2 - |S|.

    Each of the |S| doubles is hit once and each of the |S|(|S|-1)/2
    distinct pairs twice, so sum r^2 = |S| + 4 * |S|(|S|-1)/2.
    """
    return 2 * size * size - size


def group_product(*sets: GroupSet, cap: int = GROUP_ENERGY_CAP) -> GroupSet:
    """Direct product of group sets, with concatenated residue vectors."""
    size = 1
    for s in sets:
        size *= len(s)
    if size > cap:
        raise ValueError(f"product of size {size} exceeds the cap {cap}")
    spec = GroupSpec(tuple(m for s in sets for m in s.group.orders))
    members = set()
    for combo in product(*(sorted(s.elements) for s in sets)):
        members.add(tuple(c for x in combo for c in x))
    return GroupSet(spec, frozenset(members))


def cauchy_bound_check(a: GroupSet, cap: int = GROUP_ENERGY_CAP) -> bool:
    """Exact integer check of |A|^4 <= |A+A| * E(A) <= |G| * E(A).

    The second inequality is the density form 4*alpha <= 1 + alpha*(2+delta)
    with alpha = log|A|/log|G| and delta = log E/log|A| - 2.
    """
    prof = sum_profile(a, cap)
    n = len(a)
    if n == 0:
        return True
    e = sum(r * r for r in prof.values())
    return n**4 <= len(prof) * e and n**4 <= a.group.order * e


# ---------------------------------------------------------------------------
# density-energy tradeoff points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TradeoffPoint:
    """k Sidon factors and n-k full factors over groups of order p^2.

    alpha = log|A| / log|G| is exactly (2n-k)/(2n); delta and the gap to the
    limiting curve 1/(2-delta) are reported as 100-digit decimals.
    """

    k: int
    n: int
    p: int
    set_size: int
    energy: int
    alpha: Fraction
    delta: mpmath.mpf
    bound_gap: mpmath.mpf

    def curve_value(self) -> mpmath.mpf:
        with mpmath.workdps(_REPORT_DPS):
            return 1 / (2 - self.delta)


def tradeoff_point(k: int, n: int, p: int) -> TradeoffPoint:
    """Exact size and energy of the k-Sidon product set, with alpha/delta.

    |A| = p^(2n-k) and E(A) = (2p^2-p)^k * p^(6(n-k)) by multiplicativity;
    the integer bound |A|^4 <= |G| * E(A) is asserted exactly.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if not _is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    m = p * p
    size = p**k * m**(n - k)
    energy = sidon_energy(p)**k * (m**3)**(n - k)
    if size**4 > m**n * energy:
        raise RuntimeError("density bound violated; construction is wrong")
    alpha = Fraction(2 * n - k, 2 * n)
    with mpmath.workdps(_REPORT_DPS):
        if energy == size**3:  # full-group endpoint: delta = 1 exactly
            delta = mpmath.mpf(1)
        else:
            delta = mpmath.log(energy) / mpmath.log(size) - 2
        gap = abs(mpmath.mpf(alpha.numerator) / alpha.denominator - 1 / (2 - delta))
    return TradeoffPoint(k, n, p, size, energy, alpha, delta, gap)


def density_curve(n: int, p: int) -> list[TradeoffPoint]:
    """Tradeoff points for k = 0..n; the gap to 1/(2-delta) shrinks as p grows."""
    if n > 64:
        raise ValueError("dimension capped at 64")
    if p > 10_000:
        raise ValueError("prime capped at 10000 (log precision budget)")
    return [tradeoff_point(k, n, p) for k in range(n + 1)]


def integer_sidon_check(a) -> bool:
    """Sidon test for an integer set via embedding in a large cyclic group.

    A finite integer set is Sidon iff its image in Z_m is, once m exceeds
    twice the diameter (no sums can wrap).
    """
    s = _as_intset(a)
    if len(s) < 2:
        return True
    m = 4 * s.diameter + 4
    base = s.elements[0]
    spec = GroupSpec((m,))
    return is_sidon(GroupSet(spec, frozenset((x - base,) for x in s.elements)))
