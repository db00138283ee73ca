"""Exact arithmetic on dense integer-coefficient polynomials in one variable.

A polynomial is a tuple of Python ints in ascending exponent order, so
``coeffs[i]`` is the coefficient of X**i.  The representation is always
normalized: a nonzero polynomial never carries trailing zeros and the zero
polynomial is the empty tuple.  Python ints are unbounded, so every
operation is exact at any magnitude; there is no floating-point or
fixed-width path anywhere.

Division is classical long division and refuses to leave the integers: if
a step would need a fractional coefficient (only possible for a non-monic
divisor) it raises NonIntegralQuotient instead of falling back to
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NonIntegralQuotient, WindowTooSmall


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(init=False, frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients in ascending exponent order."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from highest-degree-first coefficients (CLI input order)."""
        return cls(reversed(list(coeffs)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; the zero polynomial has none."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, exponent: int) -> int:
        """Coefficient of X**exponent, 0 outside the stored range."""
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: int | IntPoly) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly.one()
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder with deg(remainder) < deg(divisor).

        Every step must divide exactly over the integers; a non-monic
        divisor whose leading coefficient does not divide the running
        head raises NonIntegralQuotient.
        """
        if not isinstance(other, IntPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        den = other.coeffs
        dd = len(den) - 1
        lead = den[-1]
        num = list(self.coeffs)
        if len(num) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(num) - dd)
        for shift in range(len(num) - dd - 1, -1, -1):
            head = num[shift + dd]
            if head == 0:
                continue
            step, rem = divmod(head, lead)
            if rem:
                raise NonIntegralQuotient(
                    f"{head} is not divisible by leading coefficient {lead}"
                )
            quot[shift] = step
            for i, d in enumerate(den):
                num[shift + i] -= step * d
        return IntPoly(quot), IntPoly(num)

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: IntPoly) -> IntPoly:
        return divmod(self, other)[1]

    def compose_power(self, k: int) -> IntPoly:
        """Substitute X**k for X: coefficient of X**i moves to X**(i*k)."""
        if k < 1:
            raise ValueError("composition power must be >= 1")
        if not self.coeffs or k == 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def reverse(self, n: int) -> IntPoly:
        """Return X**n * p(1/X): coefficients reversed within window n+1."""
        if n < 0:
            raise WindowTooSmall("reversal window must be >= 0")
        if not self.coeffs:
            return self
        if n < len(self.coeffs) - 1:
            raise WindowTooSmall(
                f"window {n} is smaller than degree {len(self.coeffs) - 1}"
            )
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def evaluate(self, x: int) -> int:
        """Exact value at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        """Descending powers with explicit signs, e.g. 'X^4-3X^2+1'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                term = "X" if e == 1 else f"X^{e}"
                if mag != 1:
                    term = f"{mag}{term}"
            parts.append(sign + term)
        return "".join(parts)
