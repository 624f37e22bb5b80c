"""Symbolic zeta values, Bernoulli numbers and multiple zeta values.

``ZetaExpr`` is a polynomial with rational coefficients in the symbols
gamma, pi and zeta(k) for k >= 2. pi may carry negative exponents, since
genus coefficients come with (2 pi)^(2n) denominators. zeta(1) is not a
symbol: every place that would produce it produces gamma instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import mpmath

from .constants import CONSTANTS, TABLE_DIGITS
from .errors import CapabilityError, DomainError
from .lattice import set_partition_sum
from .series import FormalSeries

PI = 0
GAMMA = 1
MAX_DEPTH = 10
MAX_DIGITS = 1000


def _symbol_text(s: int) -> str:
    if s == PI:
        return "pi"
    if s == GAMMA:
        return "gamma"
    return f"zeta({s})"


def _symbol_json(s: int) -> str:
    if s == PI:
        return "pi"
    if s == GAMMA:
        return "gamma"
    return f"zeta{s}"


def _symbol_from_json(name: str) -> int:
    if name == "pi":
        return PI
    if name == "gamma":
        return GAMMA
    if name.startswith("zeta") and name[4:].isdigit() and int(name[4:]) >= 2:
        return int(name[4:])
    raise DomainError(f"unknown symbol {name!r}")


def format_fraction(q: Fraction) -> str:
    """Always p/q with q > 0, so 0 renders as 0/1."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _coef_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mono_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for s, e in b:
        exps[s] = exps.get(s, 0) + e
    return tuple(sorted((s, e) for s, e in exps.items() if e != 0))


class ZetaExpr:
    """Element of Q[gamma, pi, pi^-1, zeta(2), zeta(3), ...]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted((s, e) for s, e in mono if e != 0))
                for s, e in mono:
                    if e < 0 and s != PI:
                        raise DomainError("only pi may have a negative exponent")
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "ZetaExpr":
        return cls({(): Fraction(c)})

    @classmethod
    def symbol(cls, s: int, exp: int = 1) -> "ZetaExpr":
        return cls({((s, exp),): Fraction(1)})

    @classmethod
    def pi(cls, exp: int = 1) -> "ZetaExpr":
        return cls.symbol(PI, exp)

    @classmethod
    def gamma(cls) -> "ZetaExpr":
        return cls.symbol(GAMMA)

    @classmethod
    def zeta(cls, k: int) -> "ZetaExpr":
        """zeta(k) for k >= 2, and gamma for k = 1."""
        if k < 1:
            raise DomainError(f"zeta({k}) is not a symbol")
        return cls.symbol(GAMMA if k == 1 else k)

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "ZetaExpr | None":
        if isinstance(other, ZetaExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return ZetaExpr.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ZetaExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaExpr({m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ZetaExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # division only by monomials c * pi^k
        if len(other.terms) == 1:
            (mono, c), = other.terms.items()
            if all(s == PI for s, _ in mono):
                inv = {tuple((s, -e) for s, e in mono): 1 / c}
                return self * ZetaExpr(inv)
        raise DomainError(f"cannot divide by {other}")

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return ZetaExpr.const(1) / (self ** -k)
        out = ZetaExpr.const(1)
        for _ in range(k):
            out = out * self
        return out

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # queries ------------------------------------------------------------

    def is_rational(self) -> bool:
        return all(m == () for m in self.terms)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.terms.get((), Fraction(0))

    def symbols(self) -> set[int]:
        return {s for m in self.terms for s, _ in m}

    def coefficient(self, mono: tuple = ()) -> Fraction:
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def reduce_even(self) -> "ZetaExpr":
        """Replace every zeta(2k) by its rational multiple of pi^(2k)."""
        out = ZetaExpr()
        for mono, c in self.terms.items():
            piece = ZetaExpr.const(c)
            for s, e in mono:
                if s >= 2 and s % 2 == 0:
                    piece = piece * zeta_even_reduce(s) ** e
                else:
                    piece = piece * ZetaExpr.symbol(s, e)
            out = out + piece
        return out

    # rendering ----------------------------------------------------------

    def _ordered(self):
        def key(item):
            mono = item[0]
            degree = sum(e for s, e in mono if s != PI)
            return (-degree, [(s, -e) for s, e in mono])
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self._ordered():
            factors = [_symbol_text(s) + (f"^{e}" if e != 1 else "") for s, e in mono]
            mag = abs(c)
            if not factors:
                body = _coef_text(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_coef_text(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"ZetaExpr({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"coef": format_fraction(c),
                           "syms": {_symbol_json(s): e for s, e in mono}}
                          for mono, c in self._ordered()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ZetaExpr":
        terms: dict[tuple, Fraction] = {}
        for t in data["terms"]:
            mono = tuple(sorted((_symbol_from_json(k), int(v)) for k, v in t["syms"].items()))
            terms[mono] = terms.get(mono, 0) + Fraction(t["coef"])
        return cls(terms)


def as_zeta(x) -> ZetaExpr:
    return x if isinstance(x, ZetaExpr) else ZetaExpr.const(x)


# ---------------------------------------------------------------------------
# Bernoulli numbers and even zeta values
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_upto(order: int) -> tuple[Fraction, ...]:
    # x/(e^x - 1) = 1 / sum_k x^k/(k+1)!
    denom = FormalSeries([Fraction(1, math.factorial(k + 1)) for k in range(order + 1)])
    inv = denom.inverse()
    return tuple(inv[k] * math.factorial(k) for k in range(order + 1))


def bernoulli(m: int) -> Fraction:
    """B_m for even m >= 2, via exact inversion of (e^x - 1)/x."""
    if m < 2 or m % 2:
        raise DomainError(f"bernoulli expects an even index >= 2, got {m}")
    order = -(-m // 32) * 32
    return _bernoulli_upto(order)[m]


@lru_cache(maxsize=None)
def zeta_even_reduce(m: int) -> ZetaExpr:
    """zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_(2n) / (2 (2n)!)."""
    if m < 2 or m % 2:
        raise DomainError(f"zeta_even_reduce expects an even index >= 2, got {m}")
    n = m // 2
    c = Fraction((-1) ** (n - 1) * 2 ** m, 2 * math.factorial(m)) * bernoulli(m)
    return ZetaExpr({((PI, m),): c})


# ---------------------------------------------------------------------------
# Hoffman symmetrization formulas
# ---------------------------------------------------------------------------


def _check_args(t: Sequence[int], least: int) -> tuple[int, ...]:
    t = tuple(int(x) for x in t)
    if not t:
        raise DomainError("need at least one argument")
    if len(t) > MAX_DEPTH:
        raise CapabilityError(f"depth {len(t)} exceeds {MAX_DEPTH}")
    if any(x < least for x in t):
        raise DomainError(f"arguments must be >= {least}: {t}")
    return t


def zeta_sym(t: Sequence[int]) -> ZetaExpr:
    """Symmetrized MZV as a signed Moebius-weighted sum of products of zetas.

    An argument equal to 1 is allowed and enters as gamma through its
    singleton block.
    """
    t = _check_args(t, 1)

    def block(vals):
        k = len(vals)
        s = sum(vals)
        assert s != 1 or k == 1
        return (-1) ** (k - 1) * math.factorial(k - 1) * ZetaExpr.zeta(s)

    return as_zeta(set_partition_sum(t, block))


def zeta_star_sym(t: Sequence[int]) -> ZetaExpr:
    """Symmetrized multiple-star zeta value; all signs positive."""
    t = _check_args(t, 2)

    def block(vals):
        return math.factorial(len(vals) - 1) * ZetaExpr.zeta(sum(vals))

    return as_zeta(set_partition_sum(t, block))


# ---------------------------------------------------------------------------
# numerics
# ---------------------------------------------------------------------------


def mzv_truncated(t: Sequence[float], N: int, star: bool = False, dps: int = 30):
    """Partial sum of zeta(t_1..t_r) (or zeta*) over indices <= N.

    Nested sums are folded from the innermost index outward, one running
    prefix sum per depth, so the cost is O(N r).
    """
    t = [mpmath.mpf(x) for x in t]
    if not t:
        raise DomainError("need at least one argument")
    if any(x <= 1 for x in t):
        raise DomainError("every exponent must exceed 1")
    if N < len(t):
        raise DomainError("N must be at least the depth")
    with mpmath.workdps(dps):
        # prefix[n] = sum over the already-folded tail with leading index <= n
        prefix = None
        for s in reversed(t):
            nxt = [mpmath.mpf(0)] * (N + 1)
            acc = mpmath.mpf(0)
            for n in range(1, N + 1):
                if prefix is None:
                    inner = 1
                else:
                    inner = prefix[n] if star else prefix[n - 1]
                acc += inner / mpmath.power(n, s)
                nxt[n] = acc
            prefix = nxt
        return +prefix[N]


def zeta_em(s: int, digits: int):
    """Riemann zeta(s), s >= 2, by Euler-Maclaurin summation to ``digits``."""
    if s < 2:
        raise DomainError("zeta_em needs s >= 2")
    work = digits + 10
    N = max(10, digits + s)
    with mpmath.workdps(work):
        eps = mpmath.mpf(10) ** (-work)
        total = mpmath.fsum(mpmath.power(n, -s) for n in range(1, N))
        Nm = mpmath.mpf(N)
        total += Nm ** (1 - s) / (s - 1) + Nm ** (-s) / 2
        rising = mpmath.mpf(s)  # s (s+1) ... (s+2k-2)
        k = 1
        last = None
        while True:
            term = mpmath.mpf(bernoulli(2 * k).numerator) / bernoulli(2 * k).denominator
            term = term / math.factorial(2 * k) * rising * Nm ** (-s - 2 * k + 1)
            total += term
            if abs(term) < eps:
                break
            if last is not None and abs(term) > abs(last):
                raise CapabilityError("Euler-Maclaurin tail stopped converging")
            last = term
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            k += 1
        return +total


def euler_gamma_em(digits: int):
    """Euler's constant from H_N - ln N with the Euler-Maclaurin correction."""
    work = digits + 10
    N = max(10, digits)
    with mpmath.workdps(work):
        eps = mpmath.mpf(10) ** (-work)
        Nm = mpmath.mpf(N)
        total = mpmath.fsum(mpmath.mpf(1) / i for i in range(1, N + 1))
        total -= mpmath.log(Nm) + 1 / (2 * Nm)
        k = 1
        while True:
            b = bernoulli(2 * k)
            term = mpmath.mpf(b.numerator) / b.denominator / (2 * k * Nm ** (2 * k))
            total += term
            if abs(term) < eps:
                break
            k += 1
        return +total


@dataclass(frozen=True)
class ZetaEvalContext:
    precision: int = 30
    truncation: int = 10_000
    constants: Mapping[str, str] = field(default_factory=lambda: CONSTANTS)

    def __post_init__(self):
        if self.precision < 1:
            raise DomainError("precision must be at least 1 digit")
        if self.truncation < 10:
            raise DomainError("truncation bound must be at least 10")


def _symbol_value(s: int, ctx: ZetaEvalContext, work: int):
    if s == PI:
        return +mpmath.pi
    name = _symbol_json(s)
    if work <= TABLE_DIGITS and name in ctx.constants:
        return mpmath.mpf(ctx.constants[name])
    if work > MAX_DIGITS:
        raise CapabilityError(f"{name} at {work} digits is beyond {MAX_DIGITS}")
    return euler_gamma_em(work) if s == GAMMA else zeta_em(s, work)


def eval_numeric(x, ctx: ZetaEvalContext | None = None):
    """Numeric value of a ZetaExpr (or rational) to ``ctx.precision`` digits.

    Even zetas are reduced to powers of pi first. Each constant is taken to
    ``precision + 15`` digits, which covers the cancellation between terms
    with coefficients up to 10^10 in magnitude.
    """
    ctx = ctx or ZetaEvalContext()
    x = as_zeta(x).reduce_even()
    work = ctx.precision + 15
    if work > MAX_DIGITS:
        raise CapabilityError(f"precision {ctx.precision} exceeds {MAX_DIGITS - 15} digits")
    with mpmath.workdps(work):
        values = {s: _symbol_value(s, ctx, work) for s in x.symbols()}
        total = mpmath.mpf(0)
        for mono, c in x.terms.items():
            term = mpmath.mpf(c.numerator) / c.denominator
            for s, e in mono:
                term *= values[s] ** e
            total += term
        return +total
