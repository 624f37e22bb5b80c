"""Integer partitions, the set-partition lattice and Doubilet's p/m/e/h sums.

Set partitions of ``[n] = {1, ..., n}`` are kept in canonical form: every
block sorted ascending and blocks ordered by their smallest element. The
canonical order on a whole lattice is lexicographic order of restricted
growth strings.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .errors import CapabilityError, DomainError

MAX_ENUMERATION = 14


# ---------------------------------------------------------------------------
# integer partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPartition:
    """A non-increasing tuple of positive integers; ``()`` is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "IntPartition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"IntPartition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def weight(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def mult_factorial(self) -> int:
        """prod_i m_i(lambda)!"""
        return math.prod(math.factorial(m) for m in Counter(self.parts).values())

    def factorial(self) -> int:
        """lambda! = prod_i lambda_i!"""
        return math.prod(math.factorial(p) for p in self.parts)

    def doubled(self) -> "IntPartition":
        return IntPartition(tuple(2 * p for p in self.parts))

    def all_even(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def halved(self) -> "IntPartition":
        if not self.all_even():
            raise DomainError(f"{self} has an odd part")
        return IntPartition(tuple(p // 2 for p in self.parts))

    def to_list(self) -> list[int]:
        return list(self.parts)

    def sort_key(self):
        # negated so that sorted() yields descending lexicographic order
        return tuple(-p for p in self.parts) + (0,)


def partitions_of(n: int) -> list[IntPartition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise DomainError("weight must be non-negative")
    return [IntPartition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def sorted_partitions(parts: Iterable[IntPartition]) -> list[IntPartition]:
    return sorted(parts, key=IntPartition.sort_key)


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``{1..n}`` into nonempty blocks, stored canonically."""

    n: int
    blocks: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise DomainError("ground set must be nonempty")
        blocks = tuple(sorted((tuple(sorted(int(a) for a in b)) for b in self.blocks),
                              key=lambda b: b[0] if b else 0))
        seen = [a for b in blocks for a in b]
        if any(not b for b in blocks):
            raise DomainError("blocks must be nonempty")
        if sorted(seen) != list(range(1, n + 1)):
            raise DomainError(f"blocks {blocks} do not partition [1..{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]]) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        return cls(sum(len(b) for b in blocks), tuple(blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        groups: dict[int, list[int]] = {}
        for i, label in enumerate(rgs, start=1):
            groups.setdefault(label, []).append(i)
        return cls(len(rgs), tuple(tuple(g) for g in groups.values()))

    @classmethod
    def bottom(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def top(cls, n: int) -> "SetPartition":
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def of_type(cls, lam: IntPartition) -> "SetPartition":
        """The partition of [|lam|] into consecutive runs of sizes lam_1, lam_2, ..."""
        blocks, start = [], 1
        for p in lam:
            blocks.append(tuple(range(start, start + p)))
            start += p
        return cls(start - 1, tuple(blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"SetPartition({self.to_list()})"

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def length(self) -> int:
        return len(self.blocks)

    def type(self) -> IntPartition:
        return IntPartition.of(len(b) for b in self.blocks)

    def rgs(self) -> tuple[int, ...]:
        label = [0] * self.n
        for k, block in enumerate(self.blocks):
            for a in block:
                label[a - 1] = k
        return tuple(label)

    def block_of(self, a: int) -> tuple[int, ...]:
        for b in self.blocks:
            if a in b:
                return b
        raise DomainError(f"{a} not in ground set")

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def canonical(self) -> "SetPartition":
        return SetPartition(self.n, self.blocks)


def _check_bound(n: int):
    if n < 1 or n > MAX_ENUMERATION:
        raise DomainError(f"n must satisfy 1 <= n <= {MAX_ENUMERATION}, got {n}")


def iter_set_partitions(n: int) -> Iterator[SetPartition]:
    """Lazily yield Pi_n in restricted-growth-string order."""
    _check_bound(n)
    for rgs in _rgs(n):
        yield SetPartition.from_rgs(rgs)


def _rgs(n: int) -> Iterator[tuple[int, ...]]:
    a = [0] * n
    top = [0] * n  # top[i] = max(a[:i+1])

    def rec(i):
        if i == n:
            yield tuple(a)
            return
        for v in range(top[i - 1] + 2):
            a[i] = v
            top[i] = max(top[i - 1], v)
            yield from rec(i + 1)

    if n == 1:
        yield (0,)
        return
    yield from rec(1)


def enumerate_set_partitions(n: int) -> list[SetPartition]:
    """All of Pi_n, once each, in restricted-growth-string order."""
    return list(iter_set_partitions(n))


def partitions_of_items(items: Sequence[Any]) -> Iterator[list[list[Any]]]:
    """Set partitions of an arbitrary finite sequence, as lists of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in partitions_of_items(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _same_ground(pi: SetPartition, rho: SetPartition):
    if pi.n != rho.n:
        raise DomainError(f"ground sets differ: {pi.n} vs {rho.n}")


def refines(pi: SetPartition, rho: SetPartition) -> bool:
    """pi <= rho: every block of pi lies inside a block of rho."""
    _same_ground(pi, rho)
    label = rho.rgs()
    return all(len({label[a - 1] for a in b}) == 1 for b in pi.blocks)


def mobius(pi: SetPartition, rho: SetPartition) -> int:
    """Moebius function of Pi_n, from the closed product of factorials."""
    if not refines(pi, rho):
        return 0
    label = rho.rgs()
    inside = Counter(label[b[0] - 1] for b in pi.blocks)
    sign = -1 if (len(pi) - len(rho)) % 2 else 1
    return sign * math.prod(math.factorial(k - 1) for k in inside.values())


def coarsenings(pi: SetPartition) -> list[SetPartition]:
    """Every rho with pi <= rho, in canonical order."""
    out = []
    for grouping in partitions_of_items(list(pi.blocks)):
        merged = tuple(tuple(a for b in group for a in b) for group in grouping)
        out.append(SetPartition(pi.n, merged))
    return sorted(out, key=SetPartition.rgs)


def refinements(pi: SetPartition) -> list[SetPartition]:
    """Every rho with rho <= pi, in canonical order."""
    per_block = [list(partitions_of_items(list(b))) for b in pi.blocks]
    out = []
    for choice in itertools.product(*per_block):
        blocks = tuple(tuple(sub) for part in choice for sub in part)
        out.append(SetPartition(pi.n, blocks))
    return sorted(out, key=SetPartition.rgs)


def block_sums(pi: SetPartition, weights: Sequence[int]) -> tuple[int, ...]:
    """(lambda_{pi_1}, ..., lambda_{pi_l}) with lambda_{B} = sum_{j in B} weights_j."""
    if len(weights) != pi.n:
        raise DomainError(f"expected {pi.n} weights, got {len(weights)}")
    return tuple(sum(weights[a - 1] for a in b) for b in pi.blocks)


def set_partition_sum(values: Sequence[Any], block_fn: Callable[[tuple], Any],
                      max_length: int | None = None):
    """Sum over pi in Pi_r of prod_{B in pi} block_fn(values restricted to B).

    ``block_fn`` sees the block's values as a sorted tuple, so it may depend
    only on the multiset of values in the block. The sum is evaluated by
    peeling off the block containing the first element and memoizing on the
    remaining multiset; the result is the same as a full enumeration of
    Pi_r but costs far less when values repeat.
    """
    if max_length is not None and len(values) > max_length:
        raise CapabilityError(f"lattice sums are capped at length {max_length}")
    memo: dict[tuple, Any] = {}

    def rest_sum(rest: tuple):
        if not rest:
            return 1
        if rest in memo:
            return memo[rest]
        first, others = rest[0], rest[1:]
        avail = sorted(Counter(others).items())
        total = 0
        for ks in itertools.product(*(range(c + 1) for _, c in avail)):
            chosen, remaining, mult = [first], [], 1
            for (v, c), k in zip(avail, ks):
                chosen += [v] * k
                remaining += [v] * (c - k)
                mult *= math.comb(c, k)
            total = total + mult * block_fn(tuple(sorted(chosen))) * rest_sum(tuple(remaining))
        memo[rest] = total
        return total

    return rest_sum(tuple(sorted(values)))


# ---------------------------------------------------------------------------
# generalized Doubilet sums over a finite weight system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSystem:
    """Values x(a, n) for a in {1..size} and n in a finite domain."""

    size: int
    domain: tuple
    table: Mapping[tuple[int, Any], Any]

    def __post_init__(self):
        if self.size < 1:
            raise DomainError("ground set must be nonempty")
        object.__setattr__(self, "domain", tuple(self.domain))
        missing = [(a, n) for a in range(1, self.size + 1) for n in self.domain
                   if (a, n) not in self.table]
        if missing:
            raise DomainError(f"weight table missing entries {missing[:3]}")

    @classmethod
    def from_function(cls, size: int, domain: Iterable, fn: Callable[[int, Any], Any]):
        domain = tuple(domain)
        table = {(a, n): fn(a, n) for a in range(1, size + 1) for n in domain}
        return cls(size, domain, table)

    def x(self, block: Iterable[int], n) -> Any:
        return math.prod((self.table[a, n] for a in block), start=1)


def _check_weights(pi: SetPartition, w: WeightSystem):
    if pi.n != w.size:
        raise DomainError(f"partition of [{pi.n}] against weight system on [{w.size}]")


def _m_blocks(blocks: Sequence[Sequence[int]], w: WeightSystem):
    total = 0
    for ns in itertools.permutations(w.domain, len(blocks)):
        total = total + math.prod((w.x(b, n) for b, n in zip(blocks, ns)), start=1)
    return total


def doubilet_p(pi: SetPartition, w: WeightSystem):
    _check_weights(pi, w)
    out = 1
    for b in pi.blocks:
        out = out * sum((w.x(b, n) for n in w.domain), start=0)
    return out


def doubilet_m(pi: SetPartition, w: WeightSystem):
    _check_weights(pi, w)
    return _m_blocks(pi.blocks, w)


def doubilet_e(pi: SetPartition, w: WeightSystem):
    _check_weights(pi, w)
    out = 1
    for b in pi.blocks:
        # elements of one block take pairwise distinct indices
        out = out * _m_blocks([(a,) for a in b], w)
    return out


def doubilet_h(pi: SetPartition, w: WeightSystem):
    _check_weights(pi, w)
    out = 1
    for b in pi.blocks:
        acc = 0
        for rho in partitions_of_items(list(b)):
            lam_fact = math.prod(math.factorial(len(r)) for r in rho)
            acc = acc + lam_fact * _m_blocks(rho, w)
        out = out * acc
    return out
