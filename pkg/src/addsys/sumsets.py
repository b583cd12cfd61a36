"""Finite sumset algebra.

A :class:`FiniteCollection` is a list of finite integer sets, each containing 0
and at least one other element.  :func:`sumset` enumerates every tuple of
summands, which makes it the brute-force oracle the rest of the package is
checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .arith import FiniteSet, radix_interval
from .errors import BudgetExceeded, NotAdditiveSystemError, NotDirectError, NotFactorableError

DEFAULT_BUDGET = 10**7

_INT64_SAFE = 2**62


class FiniteCollection:
    """An ordered family of finite sets, each containing 0 and another element."""

    __slots__ = ("_sets",)

    def __init__(self, sets: Iterable[Iterable[int]]):
        members = tuple(s if isinstance(s, FiniteSet) else FiniteSet(s) for s in sets)
        for i, s in enumerate(members):
            if 0 not in s:
                raise ValueError(f"set {i} does not contain 0: {s}")
            if len(s) < 2:
                raise ValueError(f"set {i} needs an element besides 0: {s}")
        self._sets = members

    @property
    def sets(self) -> tuple[FiniteSet, ...]:
        return self._sets

    def __iter__(self):
        return iter(self._sets)

    def __len__(self) -> int:
        return len(self._sets)

    def __getitem__(self, i: int) -> FiniteSet:
        return self._sets[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteCollection):
            return self._sets == other._sets
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._sets)

    def __repr__(self) -> str:
        return f"FiniteCollection({[list(s) for s in self._sets]})"

    def tuple_count(self) -> int:
        return math.prod(len(s) for s in self._sets)

    def to_lists(self) -> list[list[int]]:
        return [list(s) for s in self._sets]


@dataclass(frozen=True)
class Witness:
    """Two different ways of writing ``value`` as a sum of one element per set."""

    value: int
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __str__(self) -> str:
        lhs = " + ".join(map(str, self.first))
        rhs = " + ".join(map(str, self.second))
        return f"{self.value} = {lhs} = {rhs}"


@dataclass(frozen=True)
class SumsetResult:
    is_direct: bool
    sum: FiniteSet
    witness: Witness | None = field(default=None)


def _check_budget(c: FiniteCollection, budget: int) -> int:
    count = c.tuple_count()
    if count > budget:
        raise BudgetExceeded(count, budget)
    return count


def _representations(sets: Sequence[FiniteSet], value: int, limit: int) -> list[tuple[int, ...]]:
    """Depth-first search for up to ``limit`` summand tuples hitting ``value``."""
    lows = [0] * (len(sets) + 1)
    highs = [0] * (len(sets) + 1)
    for i in range(len(sets) - 1, -1, -1):
        lows[i] = lows[i + 1] + sets[i].min()
        highs[i] = highs[i + 1] + sets[i].max()

    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def search(i: int, remaining: int) -> None:
        if len(found) >= limit:
            return
        if i == len(sets):
            if remaining == 0:
                found.append(tuple(prefix))
            return
        for a in sets[i]:
            rest = remaining - a
            if lows[i + 1] <= rest <= highs[i + 1]:
                prefix.append(a)
                search(i + 1, rest)
                prefix.pop()

    search(0, value)
    return found


def _all_sums(c: FiniteCollection) -> np.ndarray:
    bound = sum(max(-s.min(), s.max()) for s in c)
    dtype = np.int64 if bound < _INT64_SAFE else object
    sums = np.zeros(1, dtype=dtype)
    for s in c:
        sums = np.add.outer(sums, np.array(s.elements, dtype=dtype)).ravel()
    return sums


def sumset(c: FiniteCollection, budget: int = DEFAULT_BUDGET) -> SumsetResult:
    """Enumerate every tuple sum of ``c`` and decide whether the sum is direct."""
    count = _check_budget(c, budget)
    sums = _all_sums(c)
    values, counts = np.unique(sums, return_counts=True)
    total = FiniteSet(int(v) for v in values)
    if len(values) == count:
        return SumsetResult(True, total)
    value = int(values[counts > 1][-1])
    first, second = _representations(c.sets, value, limit=2)
    return SumsetResult(False, total, Witness(value, first, second))


def is_direct(c: FiniteCollection, budget: int = DEFAULT_BUDGET) -> bool:
    return sumset(c, budget).is_direct


def direct_sum(c: FiniteCollection, budget: int = DEFAULT_BUDGET) -> FiniteSet:
    """The sumset of ``c``; raises :class:`NotDirectError` if it is not direct."""
    result = sumset(c, budget)
    if not result.is_direct:
        raise NotDirectError(result.witness)
    return result.sum


def contract(
    c: FiniteCollection, subset_indices: Sequence[int], budget: int = DEFAULT_BUDGET
) -> FiniteCollection:
    """Replace the selected sets by their direct sum.

    The merged set takes the position of the lowest selected index; the other
    sets keep their relative order.
    """
    chosen = list(subset_indices)
    if not chosen:
        raise ValueError("subset_indices must be nonempty")
    if len(set(chosen)) != len(chosen):
        raise ValueError(f"duplicate indices in {chosen}")
    for i in chosen:
        if not 0 <= i < len(c):
            raise IndexError(f"index {i} out of range for {len(c)} sets")
    full = sumset(c, budget)
    if not full.is_direct:
        raise NotDirectError(full.witness, f"cannot contract a non-direct collection: {full.witness}")

    merged = sumset(FiniteCollection(c[i] for i in sorted(chosen)), budget).sum
    first = min(chosen)
    out = []
    for i, s in enumerate(c):
        if i == first:
            out.append(merged)
        elif i not in chosen:
            out.append(s)
    return FiniteCollection(out)


def british_prefix(bases: Sequence[int]) -> FiniteCollection:
    """Levels ``(b_0 ... b_{i-1}) * [b_i]`` of a mixed-radix system."""
    sets = []
    scale = 1
    for b in bases:
        if b < 2:
            raise ValueError(f"every base must be >= 2, got {b}")
        sets.append(radix_interval(b).scaled(scale))
        scale *= b
    return FiniteCollection(sets)


@dataclass(frozen=True)
class BritishFactorization:
    """Bases of a British system plus, per input set, the levels merged into it."""

    bases: tuple[int, ...]
    grouping: tuple[tuple[int, ...], ...]

    def rebuild(self) -> FiniteCollection:
        levels = british_prefix(self.bases)
        return FiniteCollection(
            direct_sum(FiniteCollection(levels[j] for j in group)) for group in self.grouping
        )


def debruijn_factor(c: FiniteCollection, budget: int = DEFAULT_BUDGET) -> BritishFactorization:
    """Write an additive system for ``[N]`` as a contraction of a British system.

    Repeatedly peels ``[b]`` off the set containing 1 (``b`` being the least
    positive integer missing from it), keeps the multiples of ``b`` in that set,
    and divides everything left by ``b``.  Each split is verified rather than
    assumed.
    """
    n = c.tuple_count()
    result = sumset(c, budget)
    if not result.is_direct:
        raise NotAdditiveSystemError(
            f"not an additive system for [{n}]: sumset is not direct", result.witness
        )
    if result.sum != radix_interval(n):
        raise NotAdditiveSystemError(f"not an additive system for [{n}]: sumset is not [0, {n})")

    live: dict[int, list[int]] = {i: list(s) for i, s in enumerate(c)}
    groups: list[list[int]] = [[] for _ in range(len(c))]
    bases: list[int] = []
    while live:
        holders = [i for i, s in live.items() if 1 in s]
        if len(holders) != 1:
            raise NotFactorableError(f"expected exactly one set containing 1, found {len(holders)}")
        idx = holders[0]
        current = set(live[idx])
        b = 1
        while b in current:
            b += 1
        rest = [x for x in live[idx] if x % b == 0]
        rebuilt = {d + x for d in range(b) for x in rest}
        if rebuilt != current or len(rebuilt) != b * len(rest):
            raise NotFactorableError(f"set {sorted(current)} is not [{b}] (+) multiples of {b}")
        groups[idx].append(len(bases))
        bases.append(b)
        if rest == [0]:
            del live[idx]
        else:
            live[idx] = rest
        for i, s in live.items():
            if any(x % b for x in s):
                raise NotFactorableError(f"set {i} has elements not divisible by {b}")
            live[i] = [x // b for x in s]
    return BritishFactorization(tuple(bases), tuple(tuple(g) for g in groups))


def tiles_mod(c: FiniteCollection, modulus: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the tuple sums of ``c`` hit every residue mod ``modulus`` exactly once."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    count = _check_budget(c, budget)
    if count != modulus:
        return False
    residues = np.zeros(1, dtype=np.int64)
    for s in c:
        digits = np.array([x % modulus for x in s], dtype=np.int64)
        residues = (np.add.outer(residues, digits) % modulus).ravel()
    return bool(np.all(np.bincount(residues, minlength=modulus) == 1))
