"""Chern numbers, Chern character numbers and genus evaluation.

With Chern roots x_1..x_n, C_lam = int e_lam(x) and
Ch_lam = int p_lam(x) / lam!, so the two kinds of numbers are related by the
E <-> P transition matrices of the symmetric-function module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping

from .errors import CapabilityError, DomainError
from .genus import MAX_TABLE_WEIGHT, GenusSpec, coefficient, coefficient_table
from .lattice import (IntPartition, SetPartition, mobius, partitions_of,
                      refinements)
from .symfunc import SymPoly, basis_element, convert, multiply, transition_matrix
from .zeta import ZetaEvalContext, ZetaExpr, bernoulli, eval_numeric, format_fraction


@dataclass(frozen=True)
class _NumberVector:
    n: int
    values: Mapping[IntPartition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("dimension must be positive")
        clean = {}
        for lam, v in self.values.items():
            lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
            if lam.weight() != self.n:
                raise DomainError(f"{lam} does not have weight {self.n}")
            clean[lam] = Fraction(v)
        object.__setattr__(self, "values", clean)

    def __getitem__(self, lam) -> Fraction:
        lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
        return self.values.get(lam, Fraction(0))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return self.n == other.n and all(self[k] == other[k] for k in keys)

    def __add__(self, other):
        return type(self)(self.n, {lam: self[lam] + other[lam] for lam in partitions_of(self.n)})

    def __rmul__(self, c):
        return type(self)(self.n, {lam: c * v for lam, v in self.values.items()})

    def even_supported(self) -> bool:
        return all(lam.all_even() for lam, v in self.values.items() if v)

    def to_json(self) -> dict:
        return {"dim": self.n,
                "entries": [{"partition": lam.to_list(), "value": format_fraction(self[lam])}
                            for lam in partitions_of(self.n) if lam in self.values]}

    @classmethod
    def from_json(cls, data: Mapping):
        try:
            n = int(data["dim"])
            values = {IntPartition.of(e["partition"]): Fraction(e["value"])
                      for e in data["entries"]}
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed vector: {exc}") from exc
        return cls(n, values)


class ChernVector(_NumberVector):
    """Chern numbers C_lam of a complex dimension n."""


class ChVector(_NumberVector):
    """Chern character numbers Ch_lam of a complex dimension n."""


@lru_cache(maxsize=None)
def _p_to_e(n: int):
    return transition_matrix("P", "E", n)


@lru_cache(maxsize=None)
def _e_to_p(n: int):
    return transition_matrix("E", "P", n)


def chern_to_ch(C: ChernVector) -> ChVector:
    rows = _p_to_e(C.n)
    out = {}
    for lam, row in rows.items():
        acc = sum((t * C[mu] for mu, t in row.items()), Fraction(0))
        out[lam] = acc / lam.factorial()
    return ChVector(C.n, out)


def ch_to_chern(h: ChVector) -> ChernVector:
    rows = _e_to_p(h.n)
    out = {}
    for lam, row in rows.items():
        out[lam] = sum((t * mu.factorial() * h[mu] for mu, t in row.items()), Fraction(0))
    return ChernVector(h.n, out)


# ---------------------------------------------------------------------------
# even-partition (hyper-Kaehler) conversions through a fixed set partition
# ---------------------------------------------------------------------------


def _check_hk(vec: _NumberVector, pi: SetPartition) -> IntPartition:
    two_nu = pi.type()
    if not two_nu.all_even():
        raise DomainError(f"type {two_nu} of {pi} has an odd part")
    if pi.n != vec.n:
        raise DomainError(f"{pi} is a partition of [{pi.n}], vector has dimension {vec.n}")
    return two_nu


def _even_refinements(pi: SetPartition):
    return [rho for rho in refinements(pi) if rho.type().all_even()]


def hk_ch_to_chern(h: ChVector, pi: SetPartition) -> Fraction:
    """C_(2nu) from Chern character numbers, 2nu the type of pi.

    Only refinements rho of pi with all blocks of even size contribute;
    Chern character numbers with odd parts are taken to be zero.
    """
    two_nu = _check_hk(h, pi)
    bottom = SetPartition.bottom(pi.n)
    acc = Fraction(0)
    for rho in _even_refinements(pi):
        lam = rho.type()
        acc += mobius(bottom, rho) * lam.factorial() * h[lam]
    return acc / two_nu.factorial()


def hk_chern_to_ch(C: ChernVector, pi: SetPartition) -> Fraction:
    """Ch_(2nu) from Chern numbers, 2nu the type of pi; odd-part Chern numbers read as zero."""
    two_nu = _check_hk(C, pi)
    bottom = SetPartition.bottom(pi.n)
    acc = Fraction(0)
    for rho in _even_refinements(pi):
        lam = rho.type()
        acc += mobius(rho, pi) * lam.factorial() * C[lam]
    return acc / (two_nu.factorial() * mobius(bottom, pi))


def hk_vector_chern_to_ch(C: ChernVector) -> ChVector:
    """All even-partition Ch numbers, each through the consecutive-block partition of its type."""
    return ChVector(C.n, {lam: hk_chern_to_ch(C, SetPartition.of_type(lam))
                          for lam in partitions_of(C.n) if lam.all_even()})


def hk_vector_ch_to_chern(h: ChVector) -> ChernVector:
    return ChernVector(h.n, {lam: hk_ch_to_chern(h, SetPartition.of_type(lam))
                             for lam in partitions_of(h.n) if lam.all_even()})


# ---------------------------------------------------------------------------
# Td^1/2 through Chern characters
# ---------------------------------------------------------------------------


def td_half_ch_series(n: int) -> SymPoly:
    """exp(-sum_k B_2k/(4k) ch_2k) through weight n, in the power-sum basis."""
    exponent = SymPoly("P")
    for k in range(1, n // 2 + 1):
        c = -bernoulli(2 * k) / (4 * k) / _factorial(2 * k)
        exponent = exponent + c * basis_element("P", (2 * k,))
    total = basis_element("P", ())
    power = basis_element("P", ())
    for j in range(1, n // 2 + 1):
        power = multiply(power, exponent).truncate(n) * Fraction(1, j)
        total = total + power
    return total


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def td_half_via_ch_check(n: int) -> bool:
    """Compare the Chern-character form of Td^1/2 with its coefficient tables mod c_1."""
    from .genus import builtin_genus

    if not 0 <= n <= 8:
        raise DomainError("the check runs for weights 0..8")
    if n == 0:
        return True
    in_e = convert(td_half_ch_series(n), "E")
    g = builtin_genus("td_half")
    for m in range(1, n + 1):
        table = coefficient_table(g, m)
        for lam, b in table.items():
            if lam.multiplicity(1):
                continue
            if in_e.coefficient(lam) != b:
                return False
    return True


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def evaluate_genus(g: GenusSpec, C: ChernVector, reduce: bool = False,
                   numeric: ZetaEvalContext | None = None) -> Any:
    """sum_lam b_lam(g) C_lam, optionally reduced and evaluated numerically."""
    if C.n > MAX_TABLE_WEIGHT:
        raise CapabilityError(f"dimension {C.n} exceeds the table ceiling {MAX_TABLE_WEIGHT}")
    total: Any = Fraction(0)
    for lam, v in C.values.items():
        if v:
            total = total + coefficient(g, lam) * v
    if isinstance(total, ZetaExpr):
        if reduce or numeric is not None:
            total = total.reduce_even()
        if total.is_rational():
            total = total.to_fraction()
    if numeric is not None:
        return eval_numeric(total, numeric)
    return total


def hk_bound_report(C: ChernVector) -> dict:
    """Td^1/2 of caller-supplied Chern numbers against the interval (0, 1).

    This only reports where the number falls. Positivity and the upper
    bound are theorems about irreducible hyper-Kaehler manifolds, and
    arbitrary rational input need not come from one.
    """
    from .genus import builtin_genus

    value = evaluate_genus(builtin_genus("td_half"), C, reduce=True)
    return {
        "dim": C.n,
        "td_half": format_fraction(value),
        "applicable": C.n % 2 == 0 and C.n >= 4 and C.even_supported(),
        "positive": value > 0,
        "below_one": value < 1,
        "note": "report only; not a theorem checker",
    }
