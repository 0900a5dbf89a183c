"""Perfect matchings: the three carried by a Hamilton cycle, exact counts, bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import BudgetExceeded, OddCycle
from .graph import Edge, EmbeddedGraph, edge_key
from .hamilton import HamiltonCycle, verify_hamilton

Matching = FrozenSet[Edge]


def is_perfect_matching(g: EmbeddedGraph, m: Matching) -> bool:
    covered = [v for e in m for v in e]
    return len(covered) == g.n and len(set(covered)) == g.n and all(g.has_edge(*e) for e in m)


def matchings_from_hamilton(g: EmbeddedGraph, hc: HamiltonCycle) -> Tuple[Matching, Matching, Matching]:
    """The two alternating matchings of the cycle and the chord set."""
    if not verify_hamilton(g, hc):
        raise ValueError("not a Hamilton cycle of g")
    vs = hc.vertices
    if len(vs) % 2:
        raise OddCycle(f"cycle of odd length {len(vs)}")
    n = len(vs)
    even = frozenset(edge_key(vs[i], vs[(i + 1) % n]) for i in range(0, n, 2))
    odd = frozenset(edge_key(vs[i], vs[(i + 1) % n]) for i in range(1, n, 2))
    chords = frozenset(g.edges - hc.edges)
    for m in (even, odd, chords):
        if not is_perfect_matching(g, m):
            raise ValueError("derived edge set is not a perfect matching")
    return even, odd, chords


def _check_budget(g: EmbeddedGraph, max_n: int) -> None:
    if g.n > max_n:
        raise BudgetExceeded(f"n={g.n} exceeds the matching-count budget {max_n}")


def count_perfect_matchings(g: EmbeddedGraph, max_n: int = 60) -> int:
    """Exact count by branching on an edge: use it, or delete it."""
    _check_budget(g, max_n)
    if g.n % 2:
        return 0
    adj: List[set] = [set(nbrs) for nbrs in g.rotation]
    alive = set(range(g.n))

    def rec() -> int:
        if not alive:
            return 1
        # most constrained vertex first; an isolated one kills the branch
        v = min(alive, key=lambda x: (len(adj[x]), x))
        if not adj[v]:
            return 0
        w = min(adj[v])
        # include vw
        removed = []
        for x in (v, w):
            alive.discard(x)
            for y in adj[x]:
                adj[y].discard(x)
                removed.append((x, y))
        saved = {x: adj[x] for x in (v, w)}
        adj[v], adj[w] = set(), set()
        total = rec()
        adj[v], adj[w] = saved[v], saved[w]
        for x, y in removed:
            adj[y].add(x)
        alive.update((v, w))
        # delete vw
        adj[v].discard(w)
        adj[w].discard(v)
        total += rec()
        adj[v].add(w)
        adj[w].add(v)
        return total

    return rec()


def count_perfect_matchings_dp(g: EmbeddedGraph, max_n: int = 60) -> int:
    """Independent count: memoised recursion on the set of unmatched vertices."""
    _check_budget(g, max_n)
    if g.n % 2:
        return 0
    masks = [sum(1 << w for w in nbrs) for nbrs in g.rotation]

    @lru_cache(maxsize=None)
    def rec(left: int) -> int:
        if not left:
            return 1
        v = (left & -left).bit_length() - 1
        rest = left & ~(1 << v)
        total = 0
        options = masks[v] & rest
        while options:
            bit = options & -options
            options ^= bit
            total += rec(rest & ~bit)
        return total

    return rec((1 << g.n) - 1)


def matching_lower_bound(n: int) -> int:
    """Floor on perfect matchings of an ``n``-vertex nanotube: 15 * 2^floor(n/20)."""
    if n < 20 or n % 10:
        raise ValueError(f"nanotube orders are multiples of 10 from 20 (got {n})")
    return 15 * 2 ** (n // 20)


def hamilton_lower_bound(r: int) -> int:
    """Floor on Hamilton cycles of a tube with ``r`` hexagonal rings."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r % 2 == 0:
        return 5 * 2 ** (r // 2 + 1)
    return 5 * 2 ** ((r + 1) // 2)


def prior_matching_bound(n: int) -> int:
    """The general fullerene floor ceil(3(n+2)/4)."""
    return math.ceil(3 * (n + 2) / 4)


@dataclass(frozen=True)
class BoundReport:
    n: int
    r: int
    hamilton_bound: int
    matching_bound: int
    exact_matchings: Optional[int] = None
    exact_hamilton: Optional[int] = None
    distinct_variant_matchings: Optional[int] = None

    @property
    def holds(self) -> bool:
        ok = True
        if self.exact_matchings is not None:
            ok &= self.exact_matchings >= self.matching_bound
        if self.exact_hamilton is not None:
            ok &= self.exact_hamilton >= self.hamilton_bound
        return ok

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "hamilton_bound": self.hamilton_bound,
            "matching_bound": self.matching_bound,
            "exact_matchings": self.exact_matchings,
            "exact_hamilton": self.exact_hamilton,
            "distinct_variant_matchings": self.distinct_variant_matchings,
            "holds": self.holds,
        }


def distinct_matchings(g: EmbeddedGraph, cycles) -> int:
    """How many different perfect matchings a family of Hamilton cycles yields."""
    seen = set()
    for hc in cycles:
        seen.update(matchings_from_hamilton(g, hc))
    return len(seen)
