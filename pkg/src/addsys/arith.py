"""Integer conventions shared across the package.

Everything here works on Python ints, so magnitudes are unbounded.  Remainders
are always Euclidean (in ``[0, b)``), including for negative dividends.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator


def _check_modulus(b: int) -> None:
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")


def rem_euclid(n: int, b: int) -> int:
    """Nonnegative remainder of ``n`` on division by ``b``."""
    _check_modulus(b)
    # Python's % already rounds toward -inf for positive b
    return n % b


def div_floor(n: int, b: int) -> int:
    """Quotient ``q`` with ``n == q * b + rem_euclid(n, b)``."""
    _check_modulus(b)
    return n // b


def ceil_div(p: int, q: int) -> int:
    _check_modulus(q)
    return div_floor(p + q - 1, q)


def ceil_log(base: int, value: int) -> int:
    """Smallest ``e >= 0`` with ``base**e >= value``, by exact search."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    e, power = 0, 1
    while power < value:
        power *= base
        e += 1
    return e


class FiniteSet:
    """Immutable finite set of integers, kept sorted ascending.

    Equality is element-wise, so two sets built from the same elements in any
    order compare equal and hash alike.
    """

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int] = ()):
        self._elements = tuple(sorted({int(x) for x in elements}))

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        i = bisect_left(self._elements, x)
        return i < len(self._elements) and self._elements[i] == x

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteSet):
            return self._elements == other._elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return "FiniteSet({" + ", ".join(map(str, self._elements)) + "})"

    def scaled(self, k: int) -> FiniteSet:
        """The set ``k*A``."""
        return FiniteSet(k * x for x in self._elements)

    def min(self) -> int:
        return self._elements[0]

    def max(self) -> int:
        return self._elements[-1]

    def is_interval(self) -> bool:
        """True when the elements are consecutive integers."""
        return len(self) > 0 and self.max() - self.min() + 1 == len(self)


def radix_interval(n: int) -> FiniteSet:
    """The digit set ``[n] = {0, 1, ..., n-1}``."""
    if n < 1:
        raise ValueError(f"interval length must be >= 1, got {n}")
    return FiniteSet(range(n))
