"""Truncated formal power series over an exact coefficient ring.

Coefficients can be anything supporting ``+ - *`` with ints and
``Fraction`` (plain ``Fraction`` or ``ZetaExpr``). Every series carries its
truncation order ``N``: coefficients a_0..a_N are exact, higher ones unknown.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError


def _is_zero(c) -> bool:
    return c == 0


def _as_fraction(c) -> Fraction:
    """The inverse of a unit constant term, which must be a nonzero rational."""
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    to_fraction = getattr(c, "to_fraction", None)
    if to_fraction is not None:
        return to_fraction()
    raise DomainError(f"constant term {c!r} is not an invertible rational")


class FormalSeries:
    """a_0 + a_1 x + ... + a_N x^N + O(x^(N+1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Any], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError("truncation order must be non-negative")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "FormalSeries":
        return cls([0, 1], order)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"FormalSeries({list(self.coeffs)!r})"

    def __eq__(self, other):
        if isinstance(other, FormalSeries):
            n = min(self.order, other.order)
            return all(self[i] == other[i] for i in range(n + 1))
        return NotImplemented

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return FormalSeries(self.coeffs, order)

    def _order_with(self, other: "FormalSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            return FormalSeries([self[0] + other] + list(self.coeffs[1:]))
        n = self._order_with(other)
        return FormalSeries([self[i] + other[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return FormalSeries([c * other for c in self.coeffs])
        n = self._order_with(other)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if _is_zero(a):
                continue
            for j in range(n + 1 - i):
                b = other[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return FormalSeries(out)

    def __rmul__(self, other):
        return FormalSeries([other * c for c in self.coeffs])

    def inverse(self) -> "FormalSeries":
        inv0 = 1 / _as_fraction(self[0]) if self[0] != 0 else None
        if inv0 is None:
            raise DomainError("series with zero constant term is not invertible")
        n = self.order
        out = [inv0]
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                if not _is_zero(self[j]):
                    acc = acc + self[j] * out[k - j]
            out.append(-acc * inv0)
        return FormalSeries(out)

    def __truediv__(self, other):
        if isinstance(other, FormalSeries):
            return self * other.inverse()
        return self * (1 / _as_fraction(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def derivative(self) -> "FormalSeries":
        """Term-wise derivative; the result has order N-1."""
        if self.order == 0:
            return FormalSeries([0], 0)
        return FormalSeries([k * self[k] for k in range(1, self.order + 1)])

    def integral(self) -> "FormalSeries":
        """Antiderivative with zero constant term, order N+1."""
        return FormalSeries([0] + [self[k] * Fraction(1, k + 1) for k in range(self.order + 1)])

    def x_derivative(self) -> "FormalSeries":
        """x * d/dx, which keeps the truncation order."""
        return FormalSeries([k * self[k] for k in range(self.order + 1)])

    def scale(self, c) -> "FormalSeries":
        """Compose with x -> c x."""
        out, power = [], 1
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return FormalSeries(out)

    def log(self) -> "FormalSeries":
        if self[0] != 1:
            raise DomainError("log needs constant term 1")
        n = self.order
        # n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
        b = [0] * (n + 1)
        for m in range(1, n + 1):
            acc = m * self[m]
            for k in range(1, m):
                if not _is_zero(b[k]) and not _is_zero(self[m - k]):
                    acc = acc - k * b[k] * self[m - k]
            b[m] = acc * Fraction(1, m)
        return FormalSeries(b)

    def exp(self) -> "FormalSeries":
        if self[0] != 0:
            raise DomainError("exp needs zero constant term")
        n = self.order
        # n e_n = sum_{k=1}^n k s_k e_{n-k}
        e = [1] + [0] * n
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                if not _is_zero(self[k]) and not _is_zero(e[m - k]):
                    acc = acc + k * self[k] * e[m - k]
            e[m] = acc * Fraction(1, m)
        return FormalSeries(e)

    def power(self, alpha: Fraction) -> "FormalSeries":
        """(1 + u)^alpha by the binomial series in u = self - 1."""
        if self[0] != 1:
            raise DomainError("fractional powers need constant term 1")
        alpha = Fraction(alpha)
        u = self - 1
        result = FormalSeries.one(self.order)
        term = FormalSeries.one(self.order)
        binom = Fraction(1)
        for k in range(1, self.order + 1):
            term = term * u
            binom = binom * (alpha - k + 1) / k
            result = result + term * binom
        return result

    def sqrt(self) -> "FormalSeries":
        return self.power(Fraction(1, 2))
