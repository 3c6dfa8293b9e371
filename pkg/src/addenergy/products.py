"""Coordinatewise products of integer sets and their multiplicative energy.

A product set is a list of factor sets added componentwise (no wraparound).
Quadruple identities split coordinatewise, so the energy of the product is
the product of the factor energies; ``product_energy_oracle`` checks that
extensionally by materializing the tuples and counting, via a carry-free
digit encoding that is independent of the multiplicative route.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, log2

import numpy as np

from .constructions import build_with_target_energy
from .errors import BudgetError, default_budget
from .intset import IntSet, _as_intset, energy_oracle

MATERIALIZE_CAP = 10_000
_PAIR_CAP = 20_000_000
_INT64_SAFE = 2**62

KT_EXPONENT = log2(6)  # boolean-cube energy exponent; tight at full cubes


@dataclass(frozen=True)
class ProductSet:
    """Ordered factor sets over the alphabet {0, ..., alphabet_size-1}."""

    alphabet_size: int
    factors: tuple[IntSet, ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet size must be >= 2")
        if not self.factors:
            raise ValueError("need at least one factor")
        for f in self.factors:
            if len(f) == 0:
                raise ValueError("factors must be nonempty")
            if f.elements[0] < 0 or f.elements[-1] >= self.alphabet_size:
                raise ValueError("factor elements must lie in the alphabet")

    @property
    def size(self) -> int:
        out = 1
        for f in self.factors:
            out *= len(f)
        return out

    @property
    def dimension(self) -> int:
        return len(self.factors)


def product_set(factors, alphabet_size: int | None = None) -> ProductSet:
    """Build a ProductSet, inferring the alphabet from the factors if omitted."""
    fs = tuple(_as_intset(f) for f in factors)
    if alphabet_size is None:
        top = max((f.elements[-1] for f in fs if len(f)), default=0)
        alphabet_size = max(2, top + 1)
    return ProductSet(alphabet_size, fs)


def product_energy(p: ProductSet) -> int:
    """Energy via multiplicativity: the product of factor energies."""
    out = 1
    for f in p.factors:
        out *= energy_oracle(f)
    return out


def materialize(p: ProductSet, cap: int = MATERIALIZE_CAP) -> list[tuple[int, ...]]:
    if p.size > cap:
        raise ValueError(f"product of size {p.size} exceeds the cap {cap}")
    return list(product(*(f.elements for f in p.factors)))


def _encode(p: ProductSet) -> list[int]:
    """Tuples as digits in radix 2M-1, under which pair sums are carry-free."""
    radix = 2 * p.alphabet_size - 1
    codes = []
    for tup in product(*(f.elements for f in p.factors)):
        c = 0
        for digit in tup:
            c = c * radix + digit
        codes.append(c)
    return codes


def product_energy_oracle(p: ProductSet, cap: int = MATERIALIZE_CAP) -> int:
    """Energy by materializing all tuples and counting pair sums directly."""
    if p.size > cap:
        raise ValueError(f"product of size {p.size} exceeds the cap {cap}")
    codes = _encode(p)
    n = len(codes)
    if max(codes) < _INT64_SAFE:
        arr = np.array(codes, dtype=np.int64)
        step = max(1, _PAIR_CAP // (4 * n))
        vals, cnts = [], []
        for lo in range(0, n, step):
            v, c = np.unique(arr[lo:lo + step, None] + arr[None, :], return_counts=True)
            vals.append(v)
            cnts.append(c)
        allv = np.concatenate(vals)
        allc = np.concatenate(cnts)
        uniq, inv = np.unique(allv, return_inverse=True)
        total = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(total, inv, allc)
        return int(np.dot(total, total))
    if n * n > _PAIR_CAP:
        raise BudgetError(n * n, _PAIR_CAP, "materialized pair counting")
    counts: Counter = Counter()
    for i, x in enumerate(codes):
        counts[2 * x] += 1
        for y in codes[i + 1:]:
            counts[x + y] += 2
    return sum(c * c for c in counts.values())


# ---------------------------------------------------------------------------
# boolean-cube exponent
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CubeExponentReport:
    k: int
    cube_energy: int
    exponent_limit: float
    max_exponent: float | None
    max_subset: tuple[tuple[int, ...], ...] | None


def _tuple_energy(points) -> int:
    counts: Counter = Counter()
    pts = list(points)
    for i, x in enumerate(pts):
        counts[tuple(2 * c for c in x)] += 1
        for y in pts[i + 1:]:
            counts[tuple(a + b for a, b in zip(x, y))] += 2
    return sum(c * c for c in counts.values())


def cube_energy_exponent(k: int) -> CubeExponentReport:
    """Full-cube energy 6^k plus, for k <= 3, the exhaustive subset maximum
    of log E(A) / log |A| over all A in {0,1}^k with |A| >= 2."""
    if k < 1:
        raise ValueError("k must be positive")
    cube_energy = 6 ** k
    if k > 3:
        return CubeExponentReport(k, cube_energy, KT_EXPONENT, None, None)
    points = list(product((0, 1), repeat=k))
    best, best_subset = None, None
    for size in range(2, len(points) + 1):
        for subset in combinations(points, size):
            ratio = np.log(_tuple_energy(subset)) / np.log(size)
            if best is None or ratio > best:
                best, best_subset = ratio, subset
    return CubeExponentReport(k, cube_energy, KT_EXPONENT, float(best), best_subset)


# ---------------------------------------------------------------------------
# ratio chains of same-size products with consecutive energies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatioChain:
    """Products X_i sharing all factors but the last, with energies in a
    4-step progression; consecutive ratios stay below 1 + 360/w^3."""

    w: int
    n: int
    alphabet_size: int
    sets: tuple[ProductSet, ...]
    factor_energies: tuple[int, ...]
    energies: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    ratio_bound: Fraction
    target_length: int
    misses: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "n": self.n,
            "alphabet_size": str(self.alphabet_size),
            "target_length": self.target_length,
            "achieved": len(self.sets),
            "factor_energies": [str(e) for e in self.factor_energies],
            "energies": [str(e) for e in self.energies],
            "ratios": [{"num": str(r.numerator), "den": str(r.denominator)}
                       for r in self.ratios],
            "ratio_bound": {"num": str(self.ratio_bound.numerator),
                            "den": str(self.ratio_bound.denominator)},
            "misses": [str(t) for t in self.misses],
            "verified": True,
        }


def ratio_chain(w: int, n: int, base: int = 10) -> RatioChain:
    """Realize consecutive factor energies t0, t0+4, ... as w-element sets
    and chain them into n-fold products of constant cardinality w^n.

    The start t0 is the first admissible value at or above max(w^3/90,
    minimum energy); the chain targets floor(w^3/30) sets and stops at the
    first unreachable energy, reporting it in ``misses``.
    """
    if w < 12:
        raise ValueError("factor size must be >= 12 (builder constraint)")
    if n < 2:
        raise ValueError("dimension must be >= 2")
    floor = 2 * w * w - w
    band_lo = -(-w**3 // 90)  # ceil(w^3 / 90); below it the ratio bound fails
    t0 = max(floor, band_lo)
    t0 += (w - t0) % 4
    target_length = w**3 // 30
    factors: list[IntSet] = []
    misses: list[int] = []
    for i in range(target_length):
        t = t0 + 4 * i
        try:
            res = build_with_target_energy(w, t, base)
        except ValueError:
            misses.append(t)
            break
        if not res.reached:
            misses.append(t)
            break
        factors.append(res.witness)
    if len(factors) < 2:
        raise RuntimeError(f"chain start {t0} unreachable at w={w}")
    top = max(f.elements[-1] for f in factors)
    m = top + 1
    first = factors[0]
    sets = tuple(ProductSet(m, (first,) * (n - 1) + (f,)) for f in factors)
    factor_energies = tuple(t0 + 4 * i for i in range(len(factors)))
    e_first = factor_energies[0] ** (n - 1)
    energies = tuple(e_first * fe for fe in factor_energies)
    ratios = tuple(Fraction(b, a) for a, b in zip(energies, energies[1:]))
    bound = 1 + Fraction(360, w**3)
    return RatioChain(w, n, m, sets, factor_energies, energies, ratios, bound,
                      target_length, tuple(misses))


# ---------------------------------------------------------------------------
# empirical minimum consecutive energy ratio
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinRatioResult:
    alphabet_size: int
    factor_size: int
    dimension: int
    factor_energies: tuple[int, ...]
    products: tuple[int, ...]
    min_ratio: Fraction | None

    @property
    def degenerate(self) -> bool:
        return self.min_ratio is None


def min_ratio_empirical(alphabet_size: int, factor_size: int, dimension: int,
                        budget: int | None = None) -> MinRatioResult:
    """Exhaustive minimum of consecutive ratios among product energies.

    Collects the energies attainable by factor_size-subsets of the alphabet,
    forms every product of `dimension` of them, sorts the distinct values and
    returns the smallest consecutive ratio.  A single product value yields a
    degenerate result with no ratio.
    """
    if not factor_size <= alphabet_size <= 5:
        raise ValueError("need factor_size <= alphabet_size <= 5")
    if not 1 <= dimension <= 4:
        raise ValueError("need 1 <= dimension <= 4")
    if budget is None:
        budget = default_budget()
    subsets = comb(alphabet_size, factor_size)
    if subsets > budget:
        raise BudgetError(subsets, budget, "factor-spectrum enumeration")
    energies = sorted({energy_oracle(c)
                       for c in combinations(range(alphabet_size), factor_size)})
    prods = set()
    for combo in combinations_with_replacement(energies, dimension):
        v = 1
        for e in combo:
            v *= e
        prods.add(v)
    ordered = tuple(sorted(prods))
    if len(ordered) < 2:
        return MinRatioResult(alphabet_size, factor_size, dimension,
                              tuple(energies), ordered, None)
    best = min(Fraction(b, a) for a, b in zip(ordered, ordered[1:]))
    return MinRatioResult(alphabet_size, factor_size, dimension,
                          tuple(energies), ordered, best)
