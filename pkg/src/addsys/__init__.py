"""Additive systems for the integers: finite sumsets, canonical collections,
and the Collatz and Fractran-type constructions."""

from .arith import FiniteSet, div_floor, radix_interval, rem_euclid
from .canonical import (
    British,
    Completeness,
    ExplicitDigits,
    ExplicitPeriodic,
    Expansion,
    Level,
    LevelSpec,
    ProbeReport,
    ResidueMap,
    TrajectoryRecord,
    balanced_ternary,
    decide_consecutive,
    decimal,
    digit_t,
    doubled_balanced_ternary,
    expand,
    materialize_prefix,
    negabinary,
    probe_window,
    step_f,
    trajectory,
    verify_tail_condition,
)
from .errors import (
    BudgetExceeded,
    InconsistencyError,
    NotAdditiveSystemError,
    NotDirectError,
    NotFactorableError,
)
from .fractran import FractranProgram, FractranSyntaxError, parse, run, step_fF
from .reductions import (
    CollatzSpec,
    FractranTypeSpec,
    Phase,
    build_collatz,
    build_fractran_type,
    collatz_map,
    collatz_seed,
    diagnose,
    fractran_seed,
)
from .sumsets import (
    BritishFactorization,
    FiniteCollection,
    SumsetResult,
    british_prefix,
    contract,
    debruijn_factor,
    sumset,
    tiles_mod,
)

__version__ = "0.1.0"
