"""Fractran programs: parsing and exact-arithmetic execution.

A program is a nonempty list of positive fractions.  One step multiplies the
state by the first fraction that gives an integer; the program halts when no
fraction applies.  Input 0 halts immediately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .arith import ceil_div


class FractranSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class FractranProgram:
    fractions: tuple[Fraction, ...]
    source_text: str | None = None

    def __post_init__(self):
        if not self.fractions:
            raise ValueError("a Fractran program needs at least one fraction")
        for q in self.fractions:
            if q <= 0:
                raise ValueError(f"fractions must be positive, got {q}")

    def __len__(self):
        return len(self.fractions)

    def __str__(self):
        return " ".join(f"{q.numerator}/{q.denominator}" for q in self.fractions)


_TOKEN = re.compile(r"[^\s,()]+")
_FRACTION = re.compile(r"(\d+)/(\d+)")


def parse(text: str) -> FractranProgram:
    """Parse ``"p/q"`` tokens separated by whitespace or commas.

    Parentheses around the program (or any token) are ignored.

    >>> str(parse("(33/20, 5/11, 14/7)"))
    '33/20 5/11 2/1'
    """
    fractions = []
    for m in _TOKEN.finditer(text):
        tok = _FRACTION.fullmatch(m.group())
        if tok is None:
            raise FractranSyntaxError(f"malformed fraction {m.group()!r}", m.start())
        p, q = int(tok.group(1)), int(tok.group(2))
        if p == 0:
            raise FractranSyntaxError(f"zero numerator in {m.group()!r}", m.start())
        if q == 0:
            raise FractranSyntaxError(f"zero denominator in {m.group()!r}", m.start())
        fractions.append(Fraction(p, q))
    if not fractions:
        raise FractranSyntaxError("empty program", 0)
    return FractranProgram(tuple(fractions), text)


def step_fF(program: FractranProgram, n: int) -> int:
    """One Fractran iteration, or 0 if the program halts on ``n`` (or ``n == 0``)."""
    if n < 0:
        raise ValueError(f"Fractran states are nonnegative, got {n}")
    if n == 0:
        return 0
    for q in program.fractions:
        product = n * q.numerator
        if product % q.denominator == 0:
            return product // q.denominator
    return 0


def run(program: FractranProgram, n: int, max_steps: int = 10_000) -> tuple[list[int], bool]:
    """Iterate from ``n`` for at most ``max_steps`` steps.

    Returns the visited values (starting with ``n``, ending at the halt value
    if the program halted) and whether it halted.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    values = [n]
    for _ in range(max_steps):
        nxt = step_fF(program, values[-1])
        if nxt == 0:
            return values, True
        values.append(nxt)
    return values, False


def max_ceiling(program: FractranProgram) -> int:
    """``ceil(max F_k)``, exactly."""
    top = max(program.fractions)
    return ceil_div(top.numerator, top.denominator)
