"""Symmetric functions in the monomial, elementary, power-sum and complete bases.

All conversions pivot through the power-sum basis P. Monomial to P uses the
Moebius sum over the set-partition lattice; E and H are related to P by
Newton's identities. ``expand`` is deliberately independent of all of this:
it builds each basis element from its definition as an explicit polynomial
in finitely many variables, which makes it usable as an oracle.
"""

from __future__ import annotations

import itertools
import math
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping

from .errors import DomainError
from .lattice import IntPartition, partitions_of, set_partition_sum
from .zeta import ZetaExpr, format_fraction

BASES = ("M", "E", "P", "H")


def _key(lam: IntPartition):
    return (lam.weight(), lam.sort_key())


def _coerce_partition(lam) -> IntPartition:
    return lam if isinstance(lam, IntPartition) else IntPartition.of(lam)


class SymPoly:
    """Finite linear combination of basis elements of one basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Any, Any] | None = None):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        clean: dict[IntPartition, Any] = {}
        for lam, c in (terms or {}).items():
            lam = _coerce_partition(lam)
            clean[lam] = clean[lam] + c if lam in clean else c
        self.basis = basis
        self.terms = {lam: c for lam, c in sorted(clean.items(), key=lambda kv: _key(kv[0]))
                      if c != 0}

    # ring structure -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SymPoly):
            return NotImplemented
        other = convert(other, self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymPoly(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(self, other)
        return SymPoly(self.basis, {lam: c * other for lam, c in self.terms.items()})

    def __rmul__(self, other):
        return SymPoly(self.basis, {lam: other * c for lam, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, SymPoly):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, tuple(self.terms)))

    def __bool__(self):
        return bool(self.terms)

    # views --------------------------------------------------------------

    def coefficient(self, lam) -> Any:
        return self.terms.get(_coerce_partition(lam), 0)

    def max_weight(self) -> int:
        return max((lam.weight() for lam in self.terms), default=0)

    def component(self, n: int) -> "SymPoly":
        return SymPoly(self.basis, {lam: c for lam, c in self.terms.items() if lam.weight() == n})

    def truncate(self, n: int) -> "SymPoly":
        return SymPoly(self.basis, {lam: c for lam, c in self.terms.items() if lam.weight() <= n})

    def map_coefficients(self, fn) -> "SymPoly":
        return SymPoly(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        letter = self.basis.lower()
        text = ""
        for lam, c in self.terms.items():
            elem = f"{letter}[{','.join(map(str, lam))}]"
            if isinstance(c, ZetaExpr) and not c.is_rational():
                sign, body = "+", f"({c})*{elem}"
            else:
                q = c.to_fraction() if isinstance(c, ZetaExpr) else Fraction(c)
                sign = "-" if q < 0 else "+"
                mag = abs(q)
                body = elem if mag == 1 else f"{_rat(mag)}*{elem}"
            if not text:
                text = ("-" if sign == "-" else "") + body
            else:
                text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SymPoly({self.basis!r}, {str(self)!r})"

    def to_json(self) -> dict:
        def coef(c):
            if isinstance(c, ZetaExpr):
                return format_fraction(c.to_fraction()) if c.is_rational() else c.to_json()
            return format_fraction(Fraction(c))
        return {"basis": self.basis,
                "terms": [{"partition": lam.to_list(), "coef": coef(c)}
                          for lam, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SymPoly":
        terms = {}
        for t in data["terms"]:
            c = t["coef"]
            c = ZetaExpr.from_json(c) if isinstance(c, dict) else Fraction(c)
            terms[IntPartition.of(t["partition"])] = c
        return cls(data["basis"], terms)


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def basis_element(basis: str, lam) -> SymPoly:
    return SymPoly(basis, {_coerce_partition(lam): Fraction(1)})


# ---------------------------------------------------------------------------
# multiplicative bases: products are concatenations of partitions
# ---------------------------------------------------------------------------


def _concat_mul(f: SymPoly, g: SymPoly) -> SymPoly:
    assert f.basis == g.basis and f.basis != "M"
    out: dict[IntPartition, Any] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            lam = IntPartition.of(a.parts + b.parts)
            c = ca * cb
            out[lam] = out[lam] + c if lam in out else c
    return SymPoly(f.basis, out)


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product computed in P, returned in f's basis."""
    return convert(_concat_mul(convert(f, "P"), convert(g, "P")), f.basis)


def _product(basis: str, factors: Iterable[SymPoly]) -> SymPoly:
    out = basis_element(basis, ())
    for f in factors:
        out = _concat_mul(out, f)
    return out


# ---------------------------------------------------------------------------
# single-part transitions (Newton's identities)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> SymPoly:
    # n e_n = sum_{i=1}^n (-1)^(i-1) e_(n-i) p_i
    if n == 0:
        return basis_element("P", ())
    acc = SymPoly("P")
    for i in range(1, n + 1):
        acc = acc + (-1) ** (i - 1) * _concat_mul(_e_in_p(n - i), basis_element("P", (i,)))
    return acc * Fraction(1, n)


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> SymPoly:
    # n h_n = sum_{i=1}^n h_(n-i) p_i
    if n == 0:
        return basis_element("P", ())
    acc = SymPoly("P")
    for i in range(1, n + 1):
        acc = acc + _concat_mul(_h_in_p(n - i), basis_element("P", (i,)))
    return acc * Fraction(1, n)


@lru_cache(maxsize=None)
def _p_in_e(n: int) -> SymPoly:
    # p_n = sum_{i=1}^{n-1} (-1)^(i-1) e_i p_(n-i) + (-1)^(n-1) n e_n
    acc = (-1) ** (n - 1) * n * basis_element("E", (n,))
    for i in range(1, n):
        acc = acc + (-1) ** (i - 1) * _concat_mul(basis_element("E", (i,)), _p_in_e(n - i))
    return acc


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> SymPoly:
    # p_n = n h_n - sum_{i=1}^{n-1} h_(n-i) p_i
    acc = n * basis_element("H", (n,))
    for i in range(1, n):
        acc = acc - _concat_mul(basis_element("H", (n - i,)), _p_in_h(i))
    return acc


# ---------------------------------------------------------------------------
# monomial <-> power sum through the set-partition lattice
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _m_in_p(lam: IntPartition) -> SymPoly:
    def block(vals):
        k = len(vals)
        return ((-1) ** (k - 1) * math.factorial(k - 1)) * basis_element("P", (sum(vals),))

    total = set_partition_sum(lam.parts, block)
    if isinstance(total, int):
        total = basis_element("P", ())
    return total * Fraction(1, lam.mult_factorial())


@lru_cache(maxsize=None)
def _p_in_m(lam: IntPartition) -> SymPoly:
    # p_lambda = sum over set partitions rho of the parts of
    # prod_j m_j(lambda_rho)! * m_(lambda_rho)
    counts = set_partition_sum(lam.parts, lambda vals: basis_element("P", (sum(vals),)))
    if isinstance(counts, int):
        return basis_element("M", ())
    return SymPoly("M", {mu: c * mu.mult_factorial() for mu, c in counts.terms.items()})


@lru_cache(maxsize=None)
def _to_p(basis: str, lam: IntPartition) -> SymPoly:
    if basis == "P":
        return basis_element("P", lam)
    if basis == "M":
        return _m_in_p(lam)
    single = _e_in_p if basis == "E" else _h_in_p
    return _product("P", (single(k) for k in lam))


@lru_cache(maxsize=None)
def _from_p(target: str, lam: IntPartition) -> SymPoly:
    if target == "P":
        return basis_element("P", lam)
    if target == "M":
        return _p_in_m(lam)
    single = _p_in_e if target == "E" else _p_in_h
    return _product(target, (single(k) for k in lam))


def _linear(f: SymPoly, target: str, table) -> SymPoly:
    out: dict[IntPartition, Any] = {}
    for lam, c in f.terms.items():
        for mu, t in table(lam).terms.items():
            v = c * t
            out[mu] = out[mu] + v if mu in out else v
    return SymPoly(target, out)


def convert(f: SymPoly, target: str) -> SymPoly:
    """The same symmetric function written in ``target``."""
    if target not in BASES:
        raise DomainError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    in_p = f if f.basis == "P" else _linear(f, "P", lambda lam: _to_p(f.basis, lam))
    if target == "P":
        return in_p
    return _linear(in_p, target, lambda lam: _from_p(target, lam))


def transition_matrix(source: str, target: str, n: int) -> dict[IntPartition, dict[IntPartition, Fraction]]:
    """Row lam holds the coefficients of source_lam in the target basis."""
    return {lam: dict(convert(basis_element(source, lam), target).terms)
            for lam in partitions_of(n)}


# ---------------------------------------------------------------------------
# explicit polynomials in finitely many variables
# ---------------------------------------------------------------------------


class MultiPoly:
    """Polynomial in k variables as a map exponent-vector -> coefficient."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[tuple, Any] | None = None):
        self.k = k
        clean: dict[tuple, Any] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != k or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps} for {k} variables")
            clean[exps] = clean[exps] + c if exps in clean else c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, k: int, c=1) -> "MultiPoly":
        return cls(k, {(0,) * k: c})

    @classmethod
    def variable(cls, k: int, i: int) -> "MultiPoly":
        return cls(k, {tuple(1 if j == i else 0 for j in range(k)): 1})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "MultiPoly":
        return MultiPoly(self.k, {e: v * c for e, v in self.terms.items()})

    def mul(self, other: "MultiPoly", max_degree: int | None = None,
            degree_vars: int | None = None) -> "MultiPoly":
        """Product, dropping monomials whose degree in the first
        ``degree_vars`` variables (default all) exceeds ``max_degree``."""
        dv = self.k if degree_vars is None else degree_vars
        cap = math.inf if max_degree is None else max_degree
        right = sorted(((sum(e[:dv]), e, c) for e, c in other.terms.items()),
                       key=lambda t: t[0])
        out: dict[tuple, Any] = {}
        for e1, c1 in self.terms.items():
            room = cap - sum(e1[:dv])
            for d2, e2, c2 in right:
                if d2 > room:
                    break
                e = tuple(map(operator.add, e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        result = MultiPoly(self.k)
        result.terms = {e: c for e, c in out.items() if c != 0}
        return result

    __mul__ = mul

    def homogeneous(self, d: int) -> "MultiPoly":
        return MultiPoly(self.k, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps) -> Any:
        return self.terms.get(tuple(exps), 0)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __repr__(self):
        return f"MultiPoly({self.k}, {self.terms!r})"


def _monomial(k: int, exps: Iterable[tuple[int, int]], offset: int = 0, width: int | None = None):
    width = k if width is None else width
    v = [0] * width
    for i, e in exps:
        v[offset + i] += e
    return tuple(v)


def _elementary_poly(j: int, k: int, offset: int = 0, width: int | None = None) -> MultiPoly:
    width = k if width is None else width
    return MultiPoly(width, {_monomial(k, ((i, 1) for i in c), offset, width): 1
                             for c in itertools.combinations(range(k), j)})


def _power_poly(j: int, k: int) -> MultiPoly:
    if j == 0:
        return MultiPoly.constant(k)
    return MultiPoly(k, {_monomial(k, [(i, j)]): 1 for i in range(k)})


def _complete_poly(j: int, k: int) -> MultiPoly:
    return MultiPoly(k, {_monomial(k, ((i, 1) for i in c)): 1
                         for c in itertools.combinations_with_replacement(range(k), j)})


def _monomial_poly(lam: IntPartition, k: int, offset: int = 0, width: int | None = None) -> MultiPoly:
    width = k if width is None else width
    if len(lam) > k:
        return MultiPoly(width)
    padded = list(lam.parts) + [0] * (k - len(lam))
    terms = {}
    for perm in set(itertools.permutations(padded)):
        terms[_monomial(k, enumerate(perm), offset, width)] = 1
    return MultiPoly(width, terms)


def _element_poly(basis: str, lam: IntPartition, k: int) -> MultiPoly:
    if basis == "M":
        return _monomial_poly(lam, k)
    single = {"E": _elementary_poly, "P": _power_poly, "H": _complete_poly}[basis]
    out = MultiPoly.constant(k)
    for part in lam:
        out = out * single(part, k)
    return out


def expand(f: SymPoly, k: int) -> MultiPoly:
    """f evaluated at x_1..x_k with all further variables set to 0."""
    if k < f.max_weight():
        raise DomainError(f"{k} variables cannot separate components of weight {f.max_weight()}")
    out = MultiPoly(k)
    for lam, c in f.terms.items():
        out = out + _element_poly(f.basis, lam, k).scale(c)
    return out


def cauchy_check(n: int, k: int) -> bool:
    """prod_{i,j<=k} (1 + x_i y_j) against 1 + sum_{|lam|<=n} m_lam(x) e_lam(y)."""
    if k < n:
        raise DomainError("need at least as many variables as the weight cap")
    width = 2 * k
    lhs = MultiPoly.constant(width)
    for i in range(k):
        for j in range(k):
            factor = MultiPoly(width, {(0,) * width: 1,
                                       _monomial(width, [(i, 1), (k + j, 1)]): 1})
            lhs = lhs.mul(factor, max_degree=n, degree_vars=k)
    rhs = MultiPoly.constant(width)
    for w in range(1, n + 1):
        for lam in partitions_of(w):
            m_x = _monomial_poly(lam, k, 0, width)
            e_y = MultiPoly.constant(width)
            for part in lam:
                e_y = e_y * _elementary_poly(part, k, k, width)
            rhs = rhs + m_x * e_y
    return lhs == rhs
