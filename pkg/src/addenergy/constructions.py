"""Two-stage synthesis of integer sets with prescribed additive energy.

The coarse stage walks down from the maximum-energy arithmetic progression:
shifting the top element of {1..b} right by k lowers the energy by exactly
4bk - 2k^2 - 6k, and moving elements out of the progression into a sharply
growing "lacunary" tail (consecutive powers of the base, each exceeding
base times the body maximum) lowers it further while keeping every
tail-involved difference unique.  The fine stage nudges the energy upward in
steps of exactly +4 by replacing every third tail element x_{3i} with
2*x_{3i-1} - x_{3i-2}, which duplicates one existing difference.

Together the stages cover a contiguous band of energies, step 4, from the
minimum 2n^2 - n (all differences distinct) up to a computable ceiling;
``build_with_target_energy`` schedules both stages for a requested value and
verifies the result by direct counting before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intset import IntSet, _as_intset, energy_oracle, max_energy

# sharp-growth ratio guaranteeing all pairwise differences distinct
LACUNARY_RATIO_MIN = 10
# safety margin trimmed off both ends of the guaranteed target band
BAND_MARGIN = 66
# smallest size the target builder accepts; the spectrum module covers
# smaller sizes exhaustively
MIN_BUILD_SIZE = 12


def arithmetic_progression(n: int) -> IntSet:
    """{1, ..., n}; the unique maximum-energy shape up to affine maps."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntSet._from_sorted(tuple(range(1, n + 1)))


def shifted_ap(n: int, k: int) -> IntSet:
    """{1, ..., n-1, n+k}: the progression with its top element pushed right."""
    if n < 3:
        raise ValueError("shifted progressions need n >= 3")
    if not 1 <= k <= n - 2:
        raise ValueError("shift k must satisfy 1 <= k <= n-2")
    return IntSet._from_sorted(tuple(range(1, n)) + (n + k,))


def energy_drop(n: int, k: int) -> int:
    """Exact energy lost by the shift: 4nk - 2k^2 - 6k."""
    if n < 3 or not 1 <= k <= n - 2:
        raise ValueError("drop formula requires n >= 3 and 1 <= k <= n-2")
    return 4 * n * k - 2 * k * k - 6 * k


def mod4_residue(n: int) -> int:
    """Residue class mod 4 shared by every energy of an n-element set."""
    if n < 1:
        raise ValueError("n must be positive")
    return n % 4


@dataclass(frozen=True)
class LacunarySeq:
    """Positive integers with consecutive ratios >= ratio (default 10)."""

    elements: IntSet
    ratio: int = LACUNARY_RATIO_MIN

    def __post_init__(self):
        if self.ratio < LACUNARY_RATIO_MIN:
            raise ValueError(f"ratio must be >= {LACUNARY_RATIO_MIN}")
        els = self.elements.elements
        if els and els[0] <= 0:
            raise ValueError("lacunary sequences must be positive")
        for a, b in zip(els, els[1:]):
            if b < self.ratio * a:
                raise ValueError("consecutive ratio below the lacunary bound")

    def __len__(self) -> int:
        return len(self.elements)


def is_lacunary(a, ratio: int = LACUNARY_RATIO_MIN) -> bool:
    s = _as_intset(a)
    els = s.elements
    if els and els[0] <= 0:
        return False
    return all(b >= ratio * a_ for a_, b in zip(els, els[1:]))


def lacunary_swap(x, swaps: int) -> IntSet:
    """Apply the +4 swap to the first `swaps` blocks of three elements.

    Block i of a lacunary sequence x_1 < x_2 < ... has its third element
    x_{3i} replaced by 2*x_{3i-1} - x_{3i-2}.  Each swap raises the additive
    energy by exactly 4: one difference is duplicated, two multiplicity-one
    differences vanish, one new multiplicity-one difference appears.
    """
    seq = x if isinstance(x, LacunarySeq) else LacunarySeq(_as_intset(x))
    els = list(seq.elements.elements)
    if swaps < 0:
        raise ValueError("swap count must be nonnegative")
    if swaps > len(els) // 3:
        raise ValueError(f"at most {len(els) // 3} swaps fit in {len(els)} elements")
    for i in range(1, swaps + 1):
        els[3 * i - 1] = 2 * els[3 * i - 2] - els[3 * i - 3]
    return IntSet(els)


# ---------------------------------------------------------------------------
# staged sets: shifted-progression body + lacunary tail
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StagedSet:
    """Body {1..b-1, b+k} of size b = n - j plus j lacunary tail elements."""

    n: int
    j: int
    k: int
    base: int
    body: IntSet
    tail: IntSet

    @property
    def elements(self) -> IntSet:
        return IntSet(self.body.elements + self.tail.elements)

    @property
    def coarse_energy(self) -> int:
        return staged_energy(self.n, self.j, self.k)


def _validate_stage(n: int, j: int, k: int) -> None:
    if n < 1 or not 0 <= j <= n - 1:
        raise ValueError("need 0 <= j <= n-1")
    b = n - j
    if k == 0:
        return
    if b < 3:
        raise ValueError("a shift needs a body of at least 3 elements")
    if not 1 <= k <= b - 2:
        raise ValueError("shift k must satisfy 1 <= k <= body_size - 2")


def tail_contribution(n: int, j: int) -> int:
    """Energy added by j isolated tail elements: sum of 4s+1 as size grows."""
    b = n - j
    return 2 * n * (n - 1) - 2 * b * (b - 1) + j


def staged_energy(n: int, j: int, k: int) -> int:
    """Closed-form energy of the staged set before any fine swaps."""
    _validate_stage(n, j, k)
    b = n - j
    drop = 0 if k == 0 else energy_drop(b, k)
    return max_energy(b) - drop + tail_contribution(n, j)


def staged_set(n: int, j: int, k: int, base: int = 10) -> StagedSet:
    """Construct the staged set; tail powers start just above base * max(body)."""
    _validate_stage(n, j, k)
    if base < LACUNARY_RATIO_MIN:
        raise ValueError(f"base must be >= {LACUNARY_RATIO_MIN}")
    b = n - j
    if k:
        body = tuple(range(1, b)) + (b + k,)
    else:
        body = tuple(range(1, b + 1))
    power = base
    while power <= base * body[-1]:
        power *= base
    tail = []
    for _ in range(j):
        tail.append(power)
        power *= base
    return StagedSet(n, j, k, base, IntSet._from_sorted(body), IntSet._from_sorted(tuple(tail)))


def _stage_shifts(b: int) -> range:
    """Valid shift values for a body of size b, ascending (energy descending)."""
    return range(0, max(1, b - 1))


# ---------------------------------------------------------------------------
# target-energy builder
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BuildResult:
    """Outcome of a target-energy build.

    When ``reached`` is false the witness carries the closest energy at or
    below the target the schedule could produce; the result is never a set
    whose energy silently differs from ``energy``.
    """

    n: int
    target: int
    reached: bool
    witness: IntSet
    energy: int
    j: int
    k: int
    swaps: int


@lru_cache(maxsize=None)
def dense_ceiling(n: int) -> int:
    """Largest t such that every admissible value in [2n^2-n, t] is buildable.

    Walking stages from the largest tail down, the first stage whose swap
    budget j//3 cannot bridge its widest coarse gap leaves the first hole;
    everything below that hole is covered contiguously in steps of 4.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    for j in range(n - 1, -1, -1):
        b = n - j
        budget = j // 3
        if b >= 4 and budget <= b - 4:
            k_hole = b - 4 - budget
            return staged_energy(n, j, k_hole + 1) + 4 * budget
    return max_energy(n)


def admissible_interval(n: int) -> tuple[int, int]:
    """Guaranteed target band [2n^2-n+66, dense_ceiling-66].

    Within this band (when nonempty; it is empty below n = 20) every target
    congruent to n mod 4 is reached by the deterministic schedule.  Targets
    outside the band down to the floor 2n^2-n are attempted best-effort.
    """
    if n < MIN_BUILD_SIZE:
        raise ValueError(f"builder supports n >= {MIN_BUILD_SIZE}")
    return 2 * n * n - n + BAND_MARGIN, dense_ceiling(n) - BAND_MARGIN


def _best_at_stage(n: int, j: int, target: int) -> tuple[int, int] | None:
    """Largest coarse energy <= target at stage j, as (energy, k)."""
    b = n - j
    for k in _stage_shifts(b):
        e = staged_energy(n, j, k)
        if e <= target:
            return e, k
    return None


def build_with_target_energy(n: int, target: int, base: int = 10) -> BuildResult:
    """Synthesize an n-element integer set with the exact requested energy.

    Deterministic first-fit over stages with the largest tail first: at each
    stage take the largest coarse energy not exceeding the target and check
    whether the remaining gap is a multiple of 4 within the stage's swap
    budget.  Every returned witness is re-verified by direct counting; a miss
    returns a ``reached=False`` result carrying the closest achieved value.
    """
    if n < MIN_BUILD_SIZE:
        raise ValueError(f"builder supports n >= {MIN_BUILD_SIZE}")
    if target % 4 != n % 4:
        raise ValueError(f"energies of {n}-element sets are {n % 4} mod 4, "
                         f"target {target} is {target % 4}")
    floor = 2 * n * n - n
    if target < floor:
        raise ValueError(f"no {n}-element set has energy below {floor}")
    if target >= max_energy(n):
        raise ValueError(f"targets at or above the progression maximum "
                         f"{max_energy(n)} are out of range")

    best: tuple[int, int, int, int] | None = None  # (energy, j, k, swaps)
    hit: tuple[int, int, int] | None = None
    for j in range(n - 1, -1, -1):
        found = _best_at_stage(n, j, target)
        if found is None:
            continue
        e, k = found
        budget = j // 3
        need = (target - e) // 4
        if need <= budget:
            hit = (j, k, need)
            break
        reach = e + 4 * budget
        if best is None or reach > best[0]:
            best = (reach, j, k, budget)

    if hit is not None:
        j, k, swaps = hit
        achieved = target
    else:
        if best is None:  # below every stage; floor precondition prevents this
            raise ValueError(f"target {target} is below the construction range")
        achieved, j, k, swaps = best

    ss = staged_set(n, j, k, base)
    tail = lacunary_swap(LacunarySeq(ss.tail, base), swaps) if swaps else ss.tail
    witness = IntSet(ss.body.elements + tail.elements)
    verified = energy_oracle(witness)
    if verified != achieved or len(witness) != n:
        raise RuntimeError(
            f"schedule produced energy {verified} (size {len(witness)}) "
            f"instead of {achieved} at (n={n}, j={j}, k={k}, swaps={swaps})")
    return BuildResult(n, target, hit is not None, witness, achieved, j, k, swaps)
