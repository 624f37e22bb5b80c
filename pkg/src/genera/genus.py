"""Complex genera and the coefficients in front of their Chern numbers.

A genus is given by a monic series Q(x). Its value on a manifold of complex
dimension n is sum_{|lam| = n} b_lam C_lam, where b_n comes from the
logarithmic derivative of Q and every other b_lam is a signed Moebius sum
over set partitions of the parts of lam.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Any

from .errors import CapabilityError, DomainError
from .lattice import IntPartition, partitions_of, set_partition_sum
from .series import FormalSeries
from .symfunc import MultiPoly, _element_poly
from .zeta import ZetaExpr, as_zeta, zeta_star_sym, zeta_sym

MAX_ORDER = 16
MAX_LENGTH = 12
MAX_TABLE_WEIGHT = 10
MAX_ORACLE_WEIGHT = 8
BUILTINS = ("todd", "td_half", "gamma")


class GenusSpec:
    """A named monic series Q with write-once caches of b_n and b_lam."""

    def __init__(self, name: str, Q: FormalSeries):
        if Q[0] != 1:
            raise DomainError("genus series must be monic")
        self.name = name
        self.Q = Q
        self._b: tuple | None = None
        self._coef: dict[IntPartition, Any] = {}
        self._lock = threading.Lock()

    @property
    def order(self) -> int:
        return self.Q.order

    def __repr__(self):
        return f"GenusSpec({self.name!r}, order={self.order})"


def builtin_genus(name: str, order: int = MAX_ORDER) -> GenusSpec:
    if not 1 <= order <= MAX_ORDER:
        raise DomainError(f"order must lie in 1..{MAX_ORDER}")
    if name == "todd":
        return GenusSpec("todd", _todd_series(order))
    if name == "td_half":
        return GenusSpec("td_half", _todd_series(order).sqrt())
    if name == "gamma":
        # -log Gamma(1 + x) = gamma x - sum_{i>=2} zeta(i)/i (-x)^i
        log_q = [ZetaExpr(), ZetaExpr.gamma()]
        for i in range(2, order + 1):
            log_q.append(ZetaExpr.zeta(i) * Fraction(-((-1) ** i), i))
        return GenusSpec("gamma", FormalSeries(log_q).exp())
    raise DomainError(f"unknown genus {name!r}; expected one of {', '.join(BUILTINS)}")


def _todd_series(order: int) -> FormalSeries:
    # x / (1 - e^-x) = 1 / sum_k (-1)^k x^k / (k+1)!
    denom = FormalSeries([Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order + 1)])
    return denom.inverse()


def b_sequence(g: GenusSpec, N: int) -> list:
    """b_1..b_N from 1 + sum (-1)^n b_n x^n = 1 - x (log Q)'."""
    if N > g.order:
        raise DomainError(f"{g.name} is only known to order {g.order}")
    if g._b is None or len(g._b) <= N:
        log_q = g.Q.log()
        b = tuple((-1) ** (n + 1) * n * log_q[n] for n in range(g.order + 1))
        with g._lock:
            if g._b is None:
                g._b = b
    return list(g._b[1:N + 1])


def coefficient(g: GenusSpec, lam) -> Any:
    """b_lam(g) as a Moebius-weighted sum of products of the b_n."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    if lam.length() > MAX_LENGTH:
        raise CapabilityError(f"partitions longer than {MAX_LENGTH} are not supported")
    cached = g._coef.get(lam)
    if cached is not None:
        return cached
    if lam.weight() == 0:
        return Fraction(1)
    b = [0] + b_sequence(g, lam.weight())

    def block(vals):
        k = len(vals)
        return (-1) ** (k - 1) * math.factorial(k - 1) * b[sum(vals)]

    value = set_partition_sum(lam.parts, block) * Fraction(1, lam.mult_factorial())
    with g._lock:
        g._coef.setdefault(lam, value)
    return g._coef[lam]


def coefficient_table(g: GenusSpec, n: int) -> dict[IntPartition, Any]:
    if not 1 <= n <= MAX_TABLE_WEIGHT:
        raise CapabilityError(f"tables are available for weights 1..{MAX_TABLE_WEIGHT}")
    return {lam: coefficient(g, lam) for lam in partitions_of(n)}


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * c for a, c in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def expansion_oracle(g: GenusSpec, n: int) -> dict[IntPartition, Any]:
    """Coefficients of e_lam in the degree-n part of prod_{i<=n} Q(x_i).

    Works directly with explicit polynomials in n variables and a linear
    solve against the elementary basis; no lattice sums are involved.
    """
    if not 1 <= n <= MAX_ORACLE_WEIGHT:
        raise CapabilityError(f"the expansion oracle is capped at weight {MAX_ORACLE_WEIGHT}")
    if n > g.order:
        raise DomainError(f"{g.name} is only known to order {g.order}")
    product = MultiPoly.constant(n)
    for i in range(n):
        qi = MultiPoly(n, {tuple(d if j == i else 0 for j in range(n)): g.Q[d]
                           for d in range(n + 1)})
        product = product.mul(qi, max_degree=n)
    top = product.homogeneous(n)
    parts = partitions_of(n)

    def exps(mu):
        return tuple(mu.parts) + (0,) * (n - len(mu))

    target = [top.coefficient(exps(mu)) for mu in parts]
    e_in_m = []
    for lam in parts:
        e_lam = _element_poly("E", lam, n)
        e_in_m.append([Fraction(e_lam.coefficient(exps(mu))) for mu in parts])
    inv = _invert(e_in_m)
    out = {}
    for j, lam in enumerate(parts):
        acc = 0
        for i in range(len(parts)):
            if inv[i][j] != 0 and target[i] != 0:
                acc = acc + target[i] * inv[i][j]
        out[lam] = acc
    return out


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def _pi_denominator(weight: int) -> ZetaExpr:
    """1 / (2 pi)^weight."""
    return ZetaExpr({((0, -weight),): Fraction(1, 2 ** weight)})


def closed_form_td_half(lam) -> ZetaExpr:
    """b_(2 lam)(Td^1/2) through the symmetrized multiple-star zeta value."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    if lam.length() == 0:
        return ZetaExpr.const(1)
    sign = (-1) ** (lam.weight() - lam.length())
    star = zeta_star_sym(lam.doubled().parts)
    return star * _pi_denominator(2 * lam.weight()) * Fraction(sign, lam.mult_factorial())


def vanishes_by_parity(lam) -> bool:
    """True when m_1(lam) = 0 and |lam| is odd, where Td and Td^1/2 coefficients vanish."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    return lam.multiplicity(1) == 0 and lam.weight() % 2 == 1


def _even_block_sum(lam: IntPartition, block_factor: int) -> ZetaExpr:
    def block(vals):
        s = sum(vals)
        if s % 2:
            return 0
        return block_factor * math.factorial(len(vals) - 1) * ZetaExpr.zeta(s)

    total = as_zeta(set_partition_sum(lam.parts, block))
    sign = -1 if (lam.length() - lam.weight() // 2) % 2 else 1
    return total * _pi_denominator(lam.weight()) * Fraction(sign, lam.mult_factorial())


def closed_form_td_half_even(lam) -> ZetaExpr:
    """b_lam(Td^1/2) for lam without parts equal to 1."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    if lam.multiplicity(1):
        raise DomainError(f"{lam} has a part equal to 1 (needs m_1 = 0)")
    if lam.weight() % 2:
        return ZetaExpr()
    return _even_block_sum(lam, 1)


def closed_form_todd_even(lam) -> ZetaExpr:
    """b_lam(Td) for lam without parts equal to 1 and of even weight."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    if lam.multiplicity(1):
        raise DomainError(f"{lam} has a part equal to 1 (needs m_1 = 0)")
    if lam.weight() % 2:
        raise DomainError(f"{lam} has odd weight (needs |lam| even)")
    return _even_block_sum(lam, 2)


def closed_form_gamma(lam) -> ZetaExpr:
    """b_lam(Gamma) = zeta_S(lam) / prod_i m_i(lam)!, with zeta(1) read as gamma."""
    lam = lam if isinstance(lam, IntPartition) else IntPartition.of(lam)
    if lam.length() == 0:
        return ZetaExpr.const(1)
    return zeta_sym(lam.parts) * Fraction(1, lam.mult_factorial())
