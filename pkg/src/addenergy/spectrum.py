"""Exhaustive enumeration of attainable energies at fixed set size.

Energies are affine-invariant, so only normalized sets are visited: minimum
0, gcd of all differences 1, and of each set and its reflection only the
lexicographically smaller one.  The search is bounded by a maximum diameter;
the ``complete`` flag refers to the searched region only, since a set whose
normalized diameter exceeds the bound is never visited.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb

import numpy as np

from .errors import BudgetError, default_budget
from .intset import IntSet, energy_oracle

MAX_SPECTRUM_SIZE = 12
_CHUNK = 65536


@dataclass(frozen=True)
class EnergySpectrum:
    """Sorted attainable energies with one normalized witness each."""

    n: int
    diameter_bound: int
    entries: tuple[tuple[int, IntSet], ...]
    complete: bool

    def energies(self) -> list[int]:
        return [e for e, _ in self.entries]

    def to_json(self) -> dict:
        gaps = spectrum_gaps(self)
        gap_by_from = {g.from_energy: g.gap for g in gaps}
        return {
            "n": self.n,
            "diameter_bound": self.diameter_bound,
            "complete": self.complete,
            "entries": [
                {"energy": str(e), "witness": w.to_json(),
                 "gap_to_next": gap_by_from.get(e)}
                for e, w in self.entries
            ],
        }


@dataclass(frozen=True)
class GapEntry:
    from_energy: int
    to_energy: int
    gap: int
    flagged: bool


def default_diameter_bound(n: int) -> int:
    """3n^2 empirically reaches the minimum-energy sets for small n."""
    return 3 * n * n


def _batch_energies(rows: np.ndarray) -> np.ndarray:
    """Energies of many small-integer sets at once.

    Sorts each row of pairwise ordered sums and turns run lengths L into
    sum(L^2) via the identity sum over positions of (2*offset_in_run + 1).
    """
    m, n = rows.shape
    sums = (rows[:, :, None] + rows[:, None, :]).reshape(m, n * n)
    sums.sort(axis=1)
    cols = np.arange(n * n)
    new_run = np.ones((m, n * n), dtype=bool)
    new_run[:, 1:] = sums[:, 1:] != sums[:, :-1]
    run_start = np.maximum.accumulate(np.where(new_run, cols, 0), axis=1)
    return np.sum(2 * (cols - run_start) + 1, axis=1)


def _enumerate_diameter(n: int, d: int) -> dict[int, tuple[int, ...]]:
    """Energies of canonical normalized sets {0, ..., d}; lex-min witnesses."""
    found: dict[int, tuple[int, ...]] = {}
    middles = combinations(range(1, d), n - 2)
    while True:
        chunk = list(islice(middles, _CHUNK))
        if not chunk:
            break
        rows = np.zeros((len(chunk), n), dtype=np.int64)
        if n > 2:
            rows[:, 1:-1] = np.array(chunk, dtype=np.int64)
        rows[:, -1] = d
        keep = np.gcd.reduce(rows, axis=1) == 1
        if not keep.all():
            rows = rows[keep]
        if len(rows) == 0:
            continue
        # reflection dedup: keep rows lexicographically <= their mirror
        refl = d - rows[:, ::-1]
        diff = rows - refl
        first = np.argmax(diff != 0, axis=1)
        keep = diff[np.arange(len(rows)), first] <= 0
        rows = rows[keep]
        if len(rows) == 0:
            continue
        for row, e in zip(rows, _batch_energies(rows)):
            e = int(e)
            w = tuple(int(x) for x in row)
            if e not in found or w < found[e]:
                found[e] = w
    return found


def enumerate_spectrum(n: int, diameter_bound: int | None = None,
                       budget: int | None = None, threads: int = 1) -> EnergySpectrum:
    """Visit every normalized n-element set with diameter <= diameter_bound.

    Each affine orbit is visited once; distinct energies are recorded with
    their lexicographically smallest witness, so any partition of the work
    yields identical output.
    """
    if not 2 <= n <= MAX_SPECTRUM_SIZE:
        raise ValueError(f"spectrum enumeration supports 2 <= n <= {MAX_SPECTRUM_SIZE}")
    if diameter_bound is None:
        diameter_bound = default_diameter_bound(n)
    if diameter_bound < n - 1:
        raise ValueError("diameter bound below the minimum diameter n-1")
    if budget is None:
        budget = default_budget()
    visits = sum(comb(d - 1, n - 2) for d in range(n - 1, diameter_bound + 1))
    if visits > budget:
        raise BudgetError(visits, budget, f"spectrum(n={n}, diameter={diameter_bound})")

    diameters = list(range(n - 1, diameter_bound + 1))
    merged: dict[int, tuple[int, ...]] = {}
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        chunks = [diameters[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_spectrum_chunk, [(n, c) for c in chunks])
        partials = list(results)
    else:
        partials = [_spectrum_chunk((n, diameters))]
    for part in partials:
        for e, w in part.items():
            if e not in merged or w < merged[e]:
                merged[e] = w
    entries = tuple((e, IntSet._from_sorted(merged[e])) for e in sorted(merged))
    return EnergySpectrum(n, diameter_bound, entries, complete=True)


def _spectrum_chunk(args: tuple[int, list[int]]) -> dict[int, tuple[int, ...]]:
    n, diameters = args
    out: dict[int, tuple[int, ...]] = {}
    for d in diameters:
        for e, w in _enumerate_diameter(n, d).items():
            if e not in out or w < out[e]:
                out[e] = w
    return out


def spectrum_gaps(s: EnergySpectrum) -> list[GapEntry]:
    """Consecutive differences; gaps > 4 inside the guaranteed band are flagged."""
    if not s.entries:
        raise ValueError("empty spectrum has no gaps")
    band = None
    if s.n >= 12:
        from .constructions import admissible_interval
        lo, hi = admissible_interval(s.n)
        if lo <= hi:
            band = (lo, hi)
    out = []
    energies = s.energies()
    for a, b in zip(energies, energies[1:]):
        flagged = bool(band and b - a > 4 and a < band[1] and b > band[0])
        out.append(GapEntry(a, b, b - a, flagged))
    return out


def residue_check(s: EnergySpectrum) -> bool:
    """True iff every recorded energy is congruent to n mod 4."""
    return all(e % 4 == s.n % 4 for e, _ in s.entries)


def verify_witnesses(s: EnergySpectrum) -> bool:
    """Recompute each witness's energy by direct counting."""
    return all(energy_oracle(w) == e for e, w in s.entries)
