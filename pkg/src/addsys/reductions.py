"""Canonical collections built from the Collatz map and from Fractran programs.

``CollatzSpec`` has bases ``4^(i+1)`` and, on residues, ``f_i(1) = 0``,
``f_i(j) = j/2`` for even ``j`` and ``3j + 1`` for other odd ``j``.  Once a
trajectory value falls below the current base it stays below every later
base and simply follows the Collatz map until it reaches 1, then 0.  So the
collection is complete exactly when the Collatz conjecture holds.

``FractranTypeSpec`` does the same with one Fractran step in place of the
Collatz map, bases ``b^(i+1)`` with ``b = 1 + ceil(max F)``, and the residue
``b_i - 1`` sent to 1.  It is complete exactly when the program halts on
every input.

:func:`diagnose` labels each trajectory step by the region its value is in
and checks the inequalities that drive both arguments on that concrete run.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import partial

from .arith import ceil_log
from .canonical import Level, LevelSpec, ResidueMap, TrajectoryRecord, trajectory
from .errors import InconsistencyError
from .fractran import FractranProgram, max_ceiling, step_fF


def collatz_map(n: int) -> int:
    if n < 1:
        raise ValueError(f"the Collatz map is defined on positive integers, got {n}")
    return n // 2 if n % 2 == 0 else 3 * n + 1


def _collatz_residue(j: int) -> int:
    if j <= 1:
        return 0
    return collatz_map(j)


class CollatzSpec(LevelSpec):
    kind = "collatz"

    def _build_level(self, i):
        return Level(i, 4 ** (i + 1), ResidueMap(_collatz_residue, "collatz"))

    def __repr__(self):
        return "CollatzSpec()"

    def __eq__(self, other):
        return isinstance(other, CollatzSpec)

    def __hash__(self):
        return hash(CollatzSpec)


def _fractran_residue(program: FractranProgram, exceptional: int, r: int) -> int:
    if r == exceptional:
        return 1
    return step_fF(program, r)


class FractranTypeSpec(LevelSpec):
    kind = "fractran"

    def __init__(self, program: FractranProgram):
        super().__init__()
        self.program = program
        self.b = 1 + max_ceiling(program)

    def _build_level(self, i):
        base = self.b ** (i + 1)
        f = partial(_fractran_residue, self.program, base - 1)
        return Level(i, base, ResidueMap(f, "fractran"))

    def __repr__(self):
        return f"FractranTypeSpec({str(self.program)!r})"

    def __eq__(self, other):
        return isinstance(other, FractranTypeSpec) and self.program.fractions == other.program.fractions

    def __hash__(self):
        return hash(self.program.fractions)


def build_collatz() -> CollatzSpec:
    return CollatzSpec()


def build_fractran_type(program: FractranProgram) -> FractranTypeSpec:
    return FractranTypeSpec(program)


def collatz_seed(n: int) -> int:
    """A start value whose trajectory reaches ``n`` after ``ceil(log4 n) + 1`` steps."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e = ceil_log(4, n)
    return n * 2 ** ((e + 1) * (e + 2))


def fractran_seed(spec: FractranTypeSpec, n: int) -> int:
    """A start value reaching ``n`` after ``L`` steps without an exceptional residue.

    ``L = ceil(log_b(n + 1)) + 1``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    steps = ceil_log(spec.b, n + 1) + 1
    return n * spec.b ** (steps * (steps + 1) // 2)


class Phase(str, enum.Enum):
    NEGATIVE_ASCENT = "negative-ascent"
    POSITIVE_DESCENT = "positive-descent"
    CAPTURED = "captured"
    EXCEPTIONAL_HIT = "exceptional-hit"


_ORDER = {Phase.NEGATIVE_ASCENT: 0, Phase.POSITIVE_DESCENT: 1, Phase.CAPTURED: 2}


@dataclass(frozen=True)
class DiagnosticStep:
    """``value = base * quotient + remainder`` at level ``index``."""

    index: int
    value: int
    base: int
    quotient: int
    remainder: int
    phase: Phase


@dataclass(frozen=True)
class DiagnosticTrace:
    trajectory: TrajectoryRecord
    steps: tuple[DiagnosticStep, ...]

    @property
    def phases(self) -> tuple[Phase, ...]:
        return tuple(s.phase for s in self.steps)

    @property
    def exceptional_hits(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.steps if s.phase is Phase.EXCEPTIONAL_HIT)

    @property
    def captured_at(self) -> int | None:
        return self.trajectory.captured_at


def _descent_threshold(spec: LevelSpec) -> int:
    # quotients at or above this must strictly shrink the next value
    if isinstance(spec, CollatzSpec):
        return 3
    return spec.b - 1


def _check(spec: LevelSpec, steps: list[DiagnosticStep]) -> None:
    threshold = _descent_threshold(spec)
    last_rank = -1
    for cur, nxt in zip(steps, steps[1:]):
        where = f"step {cur.index} (value {cur.value}, base {cur.base})"
        if cur.phase is not Phase.EXCEPTIONAL_HIT:
            rank = _ORDER[cur.phase]
            if rank < last_rank:
                raise InconsistencyError(f"{where}: phase {cur.phase.value} after a later phase")
            last_rank = rank
        if cur.value < 0 and nxt.value <= cur.value:
            raise InconsistencyError(f"{where}: negative value did not increase ({nxt.value})")
        if 0 <= cur.value < cur.base and not 0 <= nxt.value < nxt.base:
            raise InconsistencyError(f"{where}: left the captured interval ({nxt.value})")
        if cur.phase is Phase.POSITIVE_DESCENT:
            if cur.quotient >= threshold:
                if not (nxt.value < cur.value and nxt.quotient < cur.quotient):
                    raise InconsistencyError(f"{where}: no descent (next value {nxt.value})")
            elif not 0 <= nxt.value < nxt.base:
                raise InconsistencyError(f"{where}: small quotient but not captured next")


def diagnose(spec: LevelSpec, n: int, max_depth: int = 64) -> DiagnosticTrace:
    """Trajectory of ``n`` with each value split as ``b_i k_i + r_i`` and labelled.

    Raises :class:`InconsistencyError` if the run breaks strict ascent of
    negative values, absorption into ``[b_i]``, or descent for large
    positive quotients.
    """
    if not isinstance(spec, (CollatzSpec, FractranTypeSpec)):
        raise TypeError(f"diagnose needs a Collatz or Fractran-type spec, got {spec!r}")
    record = trajectory(spec, n, max_depth)
    fractran = isinstance(spec, FractranTypeSpec)
    steps = []
    for i, v in enumerate(record.values):
        b = spec.base(i)
        k, r = divmod(v, b)
        if fractran and r == b - 1:
            phase = Phase.EXCEPTIONAL_HIT
        elif v < 0:
            phase = Phase.NEGATIVE_ASCENT
        elif k > 0:
            phase = Phase.POSITIVE_DESCENT
        else:
            phase = Phase.CAPTURED
        steps.append(DiagnosticStep(i, v, b, k, r, phase))
    _check(spec, steps)
    return DiagnosticTrace(record, tuple(steps))
