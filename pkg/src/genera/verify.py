"""Self-check suites run by ``genera verify``.

Each suite pits a computation against an independent route (definition,
brute force, explicit polynomial expansion or truncated numeric sums) and
raises AssertionError on the first disagreement.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath

from . import chern, genus, lattice, symfunc, zeta
from .lattice import IntPartition, SetPartition, partitions_of


def _check(cond: bool, msg: str):
    if not cond:
        raise AssertionError(msg)


def mobius_by_recursion(pi: SetPartition, rho: SetPartition) -> int:
    """mu(pi, rho) from mu(x,x) = 1, mu(x,y) = -sum_{x<=z<y} mu(x,z)."""
    @lru_cache(maxsize=None)
    def mu(z: SetPartition) -> int:
        if z == pi:
            return 1
        return -sum(mu(w) for w in lattice.refinements(z) if w != z and lattice.refines(pi, w))

    if not lattice.refines(pi, rho):
        return 0
    return mu(rho)


def suite_mobius(rng: random.Random):
    for n in range(1, 8):
        top = SetPartition.top(n)
        for pi in lattice.iter_set_partitions(n):
            _check(lattice.mobius(pi, pi) == 1, f"mu(pi,pi) != 1 for {pi}")
            if pi != top:
                s = sum(lattice.mobius(pi, rho) for rho in lattice.coarsenings(pi))
                _check(s == 0, f"upper-interval sum {s} for {pi}")
    for n in range(1, 9):
        expected = (-1) ** (n - 1) * math.factorial(n - 1)
        got = lattice.mobius(SetPartition.bottom(n), SetPartition.top(n))
        _check(got == expected, f"mu(0,1) on Pi_{n}")
    for n in range(1, 5):
        parts = lattice.enumerate_set_partitions(n)
        for pi in parts:
            for rho in parts:
                _check(lattice.mobius(pi, rho) == mobius_by_recursion(pi, rho),
                       f"closed form vs recursion at {pi}, {rho}")


def suite_lattice(rng: random.Random):
    for n in range(1, 11):
        count = sum(1 for _ in lattice.iter_set_partitions(n))
        rec = sum(math.comb(n - 1, k) * lattice.bell(k) for k in range(n))
        _check(count == rec == lattice.bell(n), f"Bell count at n={n}")


def random_weight_system(rng: random.Random, size: int, domain_size: int = 5):
    return lattice.WeightSystem.from_function(
        size, range(1, domain_size + 1),
        lambda a, n: Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def suite_doubilet(rng: random.Random):
    for n in range(1, 5):
        parts = lattice.enumerate_set_partitions(n)
        bottom = SetPartition.bottom(n)
        for _ in range(20):
            w = random_weight_system(rng, n)
            p = {pi: lattice.doubilet_p(pi, w) for pi in parts}
            for pi in parts:
                m = lattice.doubilet_m(pi, w)
                _check(m == sum(lattice.mobius(pi, r) * p[r] for r in lattice.coarsenings(pi)),
                       f"m-p transition at {pi}")
                h = lattice.doubilet_h(pi, w)
                _check(h == sum(abs(lattice.mobius(bottom, r)) * p[r]
                                for r in lattice.refinements(pi)),
                       f"h-p transition at {pi}")
                e = lattice.doubilet_e(pi, w)
                _check(e == sum(lattice.mobius(bottom, r) * p[r] for r in lattice.refinements(pi)),
                       f"e-p transition at {pi}")
                _check(p[pi] == sum(lattice.doubilet_m(r, w) for r in lattice.coarsenings(pi)),
                       f"p-m duality at {pi}")


def suite_symfunc(rng: random.Random):
    for n in range(0, 7):
        for lam in partitions_of(n):
            for b in symfunc.BASES:
                elem = symfunc.basis_element(b, lam)
                ref = symfunc.expand(elem, 6)
                for t in symfunc.BASES:
                    conv = symfunc.convert(elem, t)
                    _check(symfunc.expand(conv, 6) == ref, f"{b}{lam} -> {t} disagrees")
                    _check(symfunc.convert(conv, b) == elem, f"round trip {b}{lam} via {t}")
    for n in range(1, 6):
        _check(symfunc.cauchy_check(n, n), f"Cauchy identity at n={n}")


def suite_zeta(rng: random.Random):
    for n in range(1, 16):
        _check((zeta.bernoulli(2 * n) > 0) == (n % 2 == 1), f"sign of B_{2 * n}")
        c = zeta.zeta_even_reduce(2 * n).coefficient(((zeta.PI, 2 * n),))
        _check(c > 0, f"zeta({2 * n}) coefficient")
    ctx = zeta.ZetaEvalContext(precision=40)
    with mpmath.workdps(50):
        _check(abs(zeta.eval_numeric(zeta.ZetaExpr.gamma(), ctx) - mpmath.euler) < 1e-40, "gamma")
        for s in (3, 5, 7, 9):
            _check(abs(zeta.eval_numeric(zeta.ZetaExpr.zeta(s), ctx) - mpmath.zeta(s)) < 1e-40,
                   f"zeta({s})")


def suite_hoffman(rng: random.Random):
    N = 10_000
    ctx = zeta.ZetaEvalContext(precision=20)
    for star, fn in ((False, zeta.zeta_sym), (True, zeta.zeta_star_sym)):
        sym = zeta.eval_numeric(fn((2, 2)), ctx)
        trunc = 2 * zeta.mzv_truncated((2, 2), N, star=star)
        _check(abs(sym - trunc) < 1e-3, f"Hoffman (2,2) star={star}")
    for a in (2, 3, 4):
        for b in (2, 3, 4):
            lhs = zeta.mzv_truncated((a, b), N, star=True)
            rhs = zeta.mzv_truncated((a, b), N) + zeta.mzv_truncated((a + b,), N)
            _check(abs(lhs - rhs) < 1e-3, f"zeta*({a},{b}) = zeta({a},{b}) + zeta({a + b})")


def _reduced(x):
    return zeta.as_zeta(x).reduce_even()


def suite_genus_oracle(rng: random.Random):
    for name in genus.BUILTINS:
        g = genus.builtin_genus(name)
        for n in range(1, 6):
            oracle = genus.expansion_oracle(g, n)
            for lam, v in genus.coefficient_table(g, n).items():
                _check(_reduced(v) == _reduced(oracle[lam]), f"{name} {lam} vs oracle")
        b = genus.b_sequence(g, 10)
        for n in range(1, 11):
            _check(genus.coefficient(g, IntPartition((n,))) == b[n - 1], f"{name} b_{n}")


def suite_closed_forms(rng: random.Random):
    td_half = genus.builtin_genus("td_half")
    todd = genus.builtin_genus("todd")
    gam = genus.builtin_genus("gamma")
    for w in range(1, 5):
        oracle = genus.expansion_oracle(td_half, 2 * w)
        for lam in partitions_of(w):
            closed = genus.closed_form_td_half(lam).reduce_even()
            two = lam.doubled()
            _check(closed == genus.coefficient(td_half, two) == oracle[two], f"Td^1/2 at {two}")
    for w in range(1, 6):
        for lam in partitions_of(w):
            value = genus.closed_form_td_half(lam).reduce_even().to_fraction()
            _check((value > 0) == ((w - lam.length()) % 2 == 0), f"sign law at {lam}")
    for w in range(2, 9, 2):
        for lam in partitions_of(w):
            if lam.multiplicity(1):
                continue
            _check(genus.closed_form_todd_even(lam).reduce_even() == genus.coefficient(todd, lam),
                   f"Todd closed form at {lam}")
            _check(genus.closed_form_td_half_even(lam).reduce_even()
                   == genus.coefficient(td_half, lam), f"Td^1/2 even closed form at {lam}")
    ctx = zeta.ZetaEvalContext(precision=30)
    for w in range(1, 7):
        for lam in partitions_of(w):
            closed = genus.closed_form_gamma(lam)
            _check(closed == genus.coefficient(gam, lam), f"Gamma closed form at {lam}")
            if not lam.multiplicity(1):
                _check(zeta.eval_numeric(closed, ctx) > 0, f"Gamma positivity at {lam}")


def suite_vanishing(rng: random.Random):
    for name in ("todd", "td_half"):
        g = genus.builtin_genus(name)
        for w in range(1, 8):
            for lam in partitions_of(w):
                v = genus.coefficient(g, lam)
                if genus.vanishes_by_parity(lam):
                    _check(v == 0, f"{name} at {lam} should vanish")
                if name == "todd" and w % 2 and v != 0:
                    _check(lam.multiplicity(1) >= 1, f"Todd at {lam} nonzero without c_1")


def _random_vector(cls, n: int, rng: random.Random, even_only: bool = False):
    return cls(n, {lam: Fraction(rng.randint(-20, 20), rng.randint(1, 6))
                   for lam in partitions_of(n) if not even_only or lam.all_even()})


def suite_chern(rng: random.Random):
    C4 = chern.ChernVector(4, {(4,): 1})
    C22 = chern.ChernVector(4, {(2, 2): 1})
    _check(chern.chern_to_ch(C4)[(4,)] == Fraction(-1, 6), "Ch_(4) vs C_(4)")
    _check(chern.chern_to_ch(C22)[(4,)] == Fraction(1, 12), "Ch_(4) vs C_(2,2)")
    h4 = chern.ChVector(4, {(4,): 1})
    h22 = chern.ChVector(4, {(2, 2): 1})
    _check(chern.ch_to_chern(h4)[(4,)] == -6, "C_(4) vs Ch_(4)")
    _check(chern.ch_to_chern(h22)[(4,)] == Fraction(1, 2), "C_(4) vs Ch_(2,2)")
    for n in range(1, 6):
        for _ in range(50):
            C = _random_vector(chern.ChernVector, n, rng)
            _check(chern.ch_to_chern(chern.chern_to_ch(C)) == C, f"round trip at n={n}")
    for n in (2, 4, 6):
        C = _random_vector(chern.ChernVector, n, rng, even_only=True)
        h = _random_vector(chern.ChVector, n, rng, even_only=True)
        full_h = chern.chern_to_ch(C)
        full_C = chern.ch_to_chern(h)
        for two_nu in partitions_of(n):
            if not two_nu.all_even():
                continue
            for pi in lattice.iter_set_partitions(n):
                if pi.type() != two_nu:
                    continue
                _check(chern.hk_chern_to_ch(C, pi) == full_h[two_nu], f"hk Ch at {pi}")
                _check(chern.hk_ch_to_chern(h, pi) == full_C[two_nu], f"hk C at {pi}")


def suite_eq4(rng: random.Random):
    for n in range(0, 9):
        _check(chern.td_half_via_ch_check(n), f"Td^1/2 via ch at weight {n}")


SUITES: dict[str, Callable[[random.Random], None]] = {
    "mobius": suite_mobius,
    "lattice": suite_lattice,
    "doubilet": suite_doubilet,
    "symfunc": suite_symfunc,
    "zeta": suite_zeta,
    "hoffman": suite_hoffman,
    "genus-oracle": suite_genus_oracle,
    "closed-forms": suite_closed_forms,
    "vanishing": suite_vanishing,
    "chern": suite_chern,
    "eq4": suite_eq4,
}


def run(names: list[str], seed: int = 0) -> list[tuple[str, bool, float, str]]:
    results = []
    for name in names:
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            SUITES[name](rng)
            ok, detail = True, ""
        except AssertionError as exc:
            ok, detail = False, str(exc)
        results.append((name, ok, time.perf_counter() - start, detail))
    return results
