"""Monic integer linear recurrences, evaluable forward and backward.

A LinearRecurrence is a(n) = sum_{i=1..k} coefficients[i-1] * a(n-i) with
k seed values starting at a base index.  Windows may extend below the
base: the recurrence is solved backward,

    a(n) = (a(n+k) - sum_{i<k} coefficients[i-1] * a(n+k-i)) / coefficients[k-1],

which stays integral whenever the trailing coefficient is +-1 (always the
case for the k-step Fibonacci family).  A non-exact backward step raises
instead of switching to rationals.

check_identity verifies a strided self-similarity identity
a(n) = sum_j coeffs[j] * a(n - stride*(j+1)) exactly over an index range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    NonIntegralBackwardStep,
    OrderTooSmall,
    WindowTooNarrow,
)


@dataclass(frozen=True)
class SequenceWindow:
    """Contiguous slice of a sequence, indexable by absolute index."""

    lo: int
    values: tuple[int, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"index {n} outside window [{self.lo}, {self.hi}]")
        return self.values[n - self.lo]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class LinearRecurrence:
    """Monic integer recurrence with seed values at base..base+order-1."""

    coefficients: tuple[int, ...]
    initial: tuple[int, ...]
    base: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "initial", tuple(self.initial))
        if not self.coefficients:
            raise ValueError("a recurrence needs at least one coefficient")
        if len(self.coefficients) != len(self.initial):
            raise ValueError(
                f"{len(self.coefficients)} coefficients need "
                f"{len(self.coefficients)} seed values, got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def window(self, lo: int, hi: int) -> SequenceWindow:
        """Values at indices lo..hi, extending in both directions as needed."""
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        k = self.order
        values = {self.base + i: v for i, v in enumerate(self.initial)}
        for n in range(self.base + k, hi + 1):
            values[n] = sum(
                c * values[n - i] for i, c in enumerate(self.coefficients, start=1)
            )
        if lo < self.base:
            last = self.coefficients[-1]
            if last == 0:
                raise ValueError(
                    "backward extension requires a nonzero trailing coefficient"
                )
            for n in range(self.base - 1, lo - 1, -1):
                head = values[n + k] - sum(
                    self.coefficients[i - 1] * values[n + k - i] for i in range(1, k)
                )
                step, rem = divmod(head, last)
                if rem:
                    raise NonIntegralBackwardStep(
                        f"index {n}: {head} is not divisible by {last}"
                    )
                values[n] = step
        return SequenceWindow(lo, tuple(values[n] for n in range(lo, hi + 1)))


def kbonacci(k: int) -> LinearRecurrence:
    """The k-step Fibonacci sequence: k-1 zeros then a 1, all coefficients 1.

    k=2 is Fibonacci, k=3 Tribonacci, k=4 Tetranacci, with the usual
    OEIS seeds.
    """
    if k < 2:
        raise OrderTooSmall(f"order {k} is below 2")
    return LinearRecurrence((1,) * k, (0,) * (k - 1) + (1,), base=0)


def random_kbonacci(k: int, seed: int) -> LinearRecurrence:
    """k-step coefficients (all ones) with seeded random seed values in [-9, 9].

    The stride identities hold for any seed values, so these instances
    exercise that independence deterministically.
    """
    if k < 2:
        raise OrderTooSmall(f"order {k} is below 2")
    rng = random.Random(seed)
    return LinearRecurrence(
        (1,) * k, tuple(rng.randint(-9, 9) for _ in range(k)), base=0
    )


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking a strided identity over an index range."""

    coefficients: tuple[int, ...]
    stride: int
    lo: int
    hi: int
    failures: tuple[tuple[int, int, int], ...] = field(default=())
    # each failure is (index, actual value, value predicted by the identity)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def checked(self) -> int:
        return self.hi - self.lo + 1

    @property
    def first_counterexample(self) -> tuple[int, int, int] | None:
        return self.failures[0] if self.failures else None

    def residue_tallies(self, mod: int) -> dict[int, tuple[int, int]]:
        """Per residue class of the index: (indices checked, failures)."""
        if mod < 1:
            raise ValueError("modulus must be positive")
        checked = {r: 0 for r in range(mod)}
        failed = {r: 0 for r in range(mod)}
        for n in range(self.lo, self.hi + 1):
            checked[n % mod] += 1
        for n, _, _ in self.failures:
            failed[n % mod] += 1
        return {r: (checked[r], failed[r]) for r in range(mod)}


def check_identity(
    rec: LinearRecurrence,
    coefficients: Sequence[int] | Iterable[int],
    stride: int,
    lo: int,
    hi: int,
) -> IdentityReport:
    """Check a(n) == sum_j coefficients[j] * a(n - stride*(j+1)) for n in lo..hi.

    The needed window (down to lo - stride*len(coefficients)) is
    materialized internally.  Comparison is exact big-integer equality.
    """
    coefficients = tuple(coefficients)
    if not coefficients:
        raise ValueError("identity needs at least one coefficient")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    if lo > hi:
        raise WindowTooNarrow(f"empty index range [{lo}, {hi}]")
    reach = stride * len(coefficients)
    window = rec.window(lo - reach, hi)
    failures = []
    for n in range(lo, hi + 1):
        actual = window[n]
        predicted = sum(
            c * window[n - stride * j] for j, c in enumerate(coefficients, start=1)
        )
        if actual != predicted:
            failures.append((n, actual, predicted))
    return IdentityReport(coefficients, stride, lo, hi, tuple(failures))
