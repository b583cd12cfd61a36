"""Canonical collections over the integers and their canonical systems.

A canonical collection is described level by level: level ``i`` has a base
``b_i >= 2`` and a digit set ``T_i``, a complete residue system mod ``b_i``
containing 0.  The collection itself is ``{T_0, b_0 T_1, b_0 b_1 T_2, ...}``.

The attached dynamical system is ``f_i(n) = (n - t_i(n)) / b_i`` where
``t_i(n)`` is the element of ``T_i`` congruent to ``n``.  Following a
trajectory ``n, f_0(n), f_1(f_0(n)), ...`` until it hits 0 yields the
expansion of ``n``; a collection is complete exactly when every trajectory
reaches 0.

Levels are generated lazily.  Digit sets may be given explicitly or through
the map ``r -> f_i(r)`` on residues, which is how the huge-base constructions
in :mod:`addsys.reductions` avoid materializing ``T_i``.
"""

from __future__ import annotations

import enum
import math
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .arith import FiniteSet, radix_interval, rem_euclid
from .errors import BudgetExceeded
from .sumsets import DEFAULT_BUDGET, FiniteCollection


@dataclass(frozen=True)
class ExplicitDigits:
    """A digit set given by its elements."""

    elements: FiniteSet

    def __init__(self, elements: Iterable[int]):
        object.__setattr__(self, "elements", FiniteSet(elements))


@dataclass(frozen=True)
class ResidueMap:
    """A digit set given by ``f(r)`` for each residue ``r`` in ``[b]``.

    The digit for residue ``r`` is ``r - b*f(r)``; ``f(0)`` must be 0.
    """

    f: Callable[[int], int]
    name: str = ""


DigitRule = Union[ExplicitDigits, ResidueMap]


@dataclass(frozen=True)
class Level:
    index: int
    base: int
    digits: DigitRule
    _table: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"level {self.index}: base must be >= 2, got {self.base}")
        if isinstance(self.digits, ExplicitDigits):
            t = self.digits.elements
            if len(t) != self.base:
                raise ValueError(f"level {self.index}: |T| = {len(t)} but base is {self.base}")
            if 0 not in t:
                raise ValueError(f"level {self.index}: digit set must contain 0")
            table = {x % self.base: x for x in t}
            if len(table) != self.base:
                raise ValueError(
                    f"level {self.index}: {list(t)} is not a complete residue system mod {self.base}"
                )
            object.__setattr__(self, "_table", table)
        elif self.digits.f(0) != 0:
            raise ValueError(f"level {self.index}: residue map must send 0 to 0")

    def digit(self, n: int) -> int:
        """``t_i(n)``: the digit congruent to ``n`` mod the base."""
        r = rem_euclid(n, self.base)
        if self._table is not None:
            return self._table[r]
        return r - self.base * self.digits.f(r)

    def step(self, n: int) -> int:
        """``f_i(n) = (n - t_i(n)) / b_i``."""
        return (n - self.digit(n)) // self.base

    def digit_set(self) -> FiniteSet:
        if self._table is not None:
            return self.digits.elements
        return FiniteSet(r - self.base * self.digits.f(r) for r in range(self.base))


class LevelSpec(ABC):
    """Lazy, deterministic generator of the levels of a canonical collection."""

    kind: str = ""

    def __init__(self):
        self._levels: dict[int, Level] = {}

    @abstractmethod
    def _build_level(self, i: int) -> Level:
        ...

    def level(self, i: int) -> Level:
        if i < 0:
            raise ValueError(f"level index must be >= 0, got {i}")
        lv = self._levels.get(i)
        if lv is None:
            lv = self._levels[i] = self._build_level(i)
        return lv

    def base(self, i: int) -> int:
        return self.level(i).base

    def scale(self, i: int) -> int:
        """``B_i = b_0 b_1 ... b_{i-1}``."""
        return math.prod(self.base(j) for j in range(i))


def _cycle_index(i: int, length: int, cycle_from: int) -> int:
    if i < length:
        return i
    period = length - cycle_from
    return cycle_from + (i - length) % period


def _check_cycle(length: int, cycle_from: int) -> None:
    if length == 0:
        raise ValueError("at least one level is required")
    if not 0 <= cycle_from < length:
        raise ValueError(f"cycle_from must be in [0, {length}), got {cycle_from}")


class British(LevelSpec):
    """Mixed-radix system with ``T_i = [b_i]``.

    ``bases`` lists the first levels; after them ``bases[cycle_from:]`` repeats.
    """

    kind = "british"

    def __init__(self, bases: Sequence[int], cycle_from: int = 0):
        super().__init__()
        self.bases = tuple(int(b) for b in bases)
        self.cycle_from = int(cycle_from)
        _check_cycle(len(self.bases), self.cycle_from)
        for b in self.bases:
            if b < 2:
                raise ValueError(f"every base must be >= 2, got {b}")

    def _build_level(self, i):
        b = self.bases[_cycle_index(i, len(self.bases), self.cycle_from)]
        return Level(i, b, ExplicitDigits(radix_interval(b)))

    def __repr__(self):
        return f"British({list(self.bases)}, cycle_from={self.cycle_from})"

    def __eq__(self, other):
        if not isinstance(other, British):
            return NotImplemented
        return (self.bases, self.cycle_from) == (other.bases, other.cycle_from)

    def __hash__(self):
        return hash((British, self.bases, self.cycle_from))


class ExplicitPeriodic(LevelSpec):
    """Explicit digit sets, eventually periodic.

    ``digit_sets[i]`` is the unscaled ``T_i``; its size is the base.  After
    the listed levels, ``digit_sets[cycle_from:]`` repeats forever.
    """

    kind = "explicit"

    def __init__(self, digit_sets: Sequence[Iterable[int]], cycle_from: int = 0):
        super().__init__()
        self.digit_sets = tuple(FiniteSet(t) for t in digit_sets)
        self.cycle_from = int(cycle_from)
        _check_cycle(len(self.digit_sets), self.cycle_from)
        for i, t in enumerate(self.digit_sets):
            Level(i, len(t), ExplicitDigits(t))

    def _build_level(self, i):
        t = self.digit_sets[_cycle_index(i, len(self.digit_sets), self.cycle_from)]
        return Level(i, len(t), ExplicitDigits(t))

    def tail(self) -> tuple[FiniteSet, ...]:
        return self.digit_sets[self.cycle_from:]

    def __repr__(self):
        return f"ExplicitPeriodic({[list(t) for t in self.digit_sets]}, cycle_from={self.cycle_from})"

    def __eq__(self, other):
        if not isinstance(other, ExplicitPeriodic):
            return NotImplemented
        return (self.digit_sets, self.cycle_from) == (other.digit_sets, other.cycle_from)

    def __hash__(self):
        return hash((ExplicitPeriodic, self.digit_sets, self.cycle_from))


def decimal() -> British:
    return British([10])


def balanced_ternary() -> ExplicitPeriodic:
    return ExplicitPeriodic([{-1, 0, 1}])


def negabinary() -> ExplicitPeriodic:
    """``T_i = {0, (-1)^i}``, so that ``A_i = (-2)^i [2]``."""
    return ExplicitPeriodic([{0, 1}, {0, -1}])


def doubled_balanced_ternary() -> ExplicitPeriodic:
    """``T_i = {-2, 0, 2}`` at base 3: a canonical collection summing to the even integers."""
    return ExplicitPeriodic([{-2, 0, 2}])


# -- trajectories and expansions ---------------------------------------------

ZEROED = "zeroed"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class TrajectoryRecord:
    """``values[0] = start`` and ``values[i+1] = f_{s+i}(values[i])``, ``s = start_level``.

    ``depth`` is the index of the first zero when ``status`` is ``"zeroed"``,
    otherwise the number of steps taken.  ``captured_at`` is the first ``i``
    with ``0 <= values[i] < b_{s+i}``.
    """

    start: int
    values: tuple[int, ...]
    status: str
    depth: int
    captured_at: int | None
    start_level: int = 0

    @property
    def zeroed(self) -> bool:
        return self.status == ZEROED


def trajectory(spec: LevelSpec, n: int, max_depth: int = 64, start_level: int = 0) -> TrajectoryRecord:
    if max_depth < 1:
        raise ValueError(f"max_depth must be >= 1, got {max_depth}")
    values = [n]
    captured = None
    i = 0
    while True:
        current = values[-1]
        lv = spec.level(start_level + i)
        if captured is None and 0 <= current < lv.base:
            captured = i
        if current == 0:
            return TrajectoryRecord(n, tuple(values), ZEROED, i, captured, start_level)
        if i == max_depth:
            return TrajectoryRecord(n, tuple(values), EXHAUSTED, i, captured, start_level)
        values.append(lv.step(current))
        i += 1


@dataclass(frozen=True)
class Expansion:
    """Digit decomposition ``target = terms[0] + terms[1] + ...``.

    ``terms[i] = B_i * t_i(n_i)`` with ``n_i = values[i]`` and
    ``B_i = scales[i]``.  At every depth ``d`` the partial sums satisfy
    ``target == sum(terms[:d]) + scales[d] * values[d]``.
    """

    target: int
    terms: tuple[int, ...]
    values: tuple[int, ...]
    scales: tuple[int, ...]
    status: str
    depth: int

    @property
    def zeroed(self) -> bool:
        return self.status == ZEROED

    def remainder_at(self, d: int) -> int:
        return self.scales[d] * self.values[d]

    def nonzero_index(self) -> int | None:
        """Index of the first nonzero term, or None when every term is 0."""
        for i, a in enumerate(self.terms):
            if a:
                return i
        return None

    def __str__(self) -> str:
        shown = [str(a) if a >= 0 else f"({a})" for a in self.terms]
        return " + ".join(shown) if shown else "0"


def expand(spec: LevelSpec, n: int, max_depth: int = 64) -> Expansion:
    record = trajectory(spec, n, max_depth)
    terms = []
    scales = [1]
    for i, v in enumerate(record.values[:-1]):
        lv = spec.level(i)
        terms.append(scales[-1] * lv.digit(v))
        scales.append(scales[-1] * lv.base)
    return Expansion(n, tuple(terms), record.values, tuple(scales), record.status, record.depth)


def digit_t(spec: LevelSpec, i: int, n: int) -> int:
    return spec.level(i).digit(n)


def step_f(spec: LevelSpec, i: int, n: int) -> int:
    return spec.level(i).step(n)


def materialize_prefix(spec: LevelSpec, k: int, budget: int = DEFAULT_BUDGET) -> FiniteCollection:
    """The finite collection ``{A_0, ..., A_k}`` with ``A_i = B_i T_i``."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = 1
    for i in range(k + 1):
        total *= spec.base(i)
        if total > budget:
            raise BudgetExceeded(total, budget)
    sets = []
    scale = 1
    for i in range(k + 1):
        lv = spec.level(i)
        sets.append(lv.digit_set().scaled(scale))
        scale *= lv.base
    return FiniteCollection(sets)


# -- bounded completeness checks ---------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    lo: int
    hi: int
    max_depth: int
    zeroed_at: dict[int, int]
    unresolved: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.hi - self.lo + 1

    @property
    def resolved(self) -> int:
        return len(self.zeroed_at)

    @property
    def all_resolved(self) -> bool:
        return not self.unresolved

    def histogram(self) -> dict[int, int]:
        """Number of starting values per zeroing depth."""
        return dict(sorted(Counter(self.zeroed_at.values()).items()))

    def to_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "max_depth": self.max_depth,
            "total": self.total,
            "resolved": self.resolved,
            "unresolved": list(self.unresolved),
            "depth_histogram": {str(d): c for d, c in self.histogram().items()},
        }


def probe_window(spec: LevelSpec, lo: int = -256, hi: int = 256, max_depth: int = 64) -> ProbeReport:
    """Run the trajectory of every ``n`` in ``[lo, hi]`` for up to ``max_depth`` steps."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    zeroed = {}
    unresolved = []
    for n in range(lo, hi + 1):
        rec = trajectory(spec, n, max_depth)
        if rec.zeroed:
            zeroed[n] = rec.depth
        else:
            unresolved.append(n)
    return ProbeReport(lo, hi, max_depth, zeroed, tuple(unresolved))


class Completeness(str, enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    NOT_APPLICABLE = "not-applicable"


def decide_consecutive(spec: LevelSpec) -> Completeness:
    """Exact decision for collections whose digit sets are all intervals.

    Such a collection is complete iff ``max T_i > 0`` and ``min T_i < 0``
    each happen for infinitely many ``i``; for an eventually periodic
    description that means somewhere in the repeating tail.
    """
    if isinstance(spec, British):
        return Completeness.INCOMPLETE
    if not isinstance(spec, ExplicitPeriodic):
        return Completeness.NOT_APPLICABLE
    if not all(t.is_interval() for t in spec.digit_sets):
        return Completeness.NOT_APPLICABLE
    tail = spec.tail()
    if any(t.max() > 0 for t in tail) and any(t.min() < 0 for t in tail):
        return Completeness.COMPLETE
    return Completeness.INCOMPLETE


def verify_tail_condition(spec: LevelSpec, k: int, window: int, max_depth: int = 64) -> bool:
    """Bounded evidence that ``A_k + A_{k+1} + ...`` covers ``N Z``, ``N = b_0 ... b_{k-1}``.

    ``m N`` lies in that sumset iff ``m`` zeroes under levels ``k, k+1, ...``,
    so every ``|m| <= window`` is checked that way.  True only means no
    counterexample was found within ``max_depth`` steps.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for m in range(-window, window + 1):
        if not trajectory(spec, m, max_depth, start_level=k).zeroed:
            return False
    return True
