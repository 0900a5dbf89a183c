"""Cyclic edge cutsets: detection, classification and enumeration.

Two independent enumerations of cyclic 5-cutsets live here.  The structural
one reads them off the embedding (pentagon coboundaries and rings of five
faces).  The exhaustive one never looks at faces: it sweeps every edge subset
of the requested size and keeps those that are edge cuts, using the
fundamental cycles of a BFS tree as a parity filter before the real
component check.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import BadCycle, SearchExhausted, UnknownEdge
from .graph import Edge, EmbeddedGraph, Embedding, Face, components, edge_key


class Classification(str, enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class EdgeCutset:
    edges: Tuple[Edge, ...]
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]
    classification: Classification

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return self.classification is Classification.TRIVIAL


def _has_cycle(vertices: Iterable[int], adj: Sequence[Iterable[int]]) -> bool:
    """Non-empty 2-core of the induced subgraph."""
    vs = set(vertices)
    deg = {v: sum(1 for w in adj[v] if w in vs) for v in vs}
    queue = deque(v for v, d in deg.items() if d <= 1)
    alive = set(vs)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return bool(alive)


def _induces_single_cycle(g: EmbeddedGraph, side: FrozenSet[int], k: int) -> bool:
    if len(side) != k:
        return False
    degs = [sum(1 for w in g.rotation[v] if w in side) for v in side]
    if any(d != 2 for d in degs):
        return False
    sub = [[w for w in g.rotation[v] if w in side] if v in side else [] for v in range(g.n)]
    return len(components(g.n, sub, [v for v in range(g.n) if v not in side])) == 1


def classify_cutset(g: EmbeddedGraph, side_a: Iterable[int], side_b: Iterable[int], k: int) -> Classification:
    a, b = frozenset(side_a), frozenset(side_b)
    if _induces_single_cycle(g, a, k) or _induces_single_cycle(g, b, k):
        return Classification.TRIVIAL
    return Classification.NONTRIVIAL


def is_cyclic_cutset(g: EmbeddedGraph, edges: Iterable[Edge]) -> Optional[EdgeCutset]:
    """Populated cutset iff removing ``edges`` leaves two components, each with a cycle."""
    cut = sorted({edge_key(*e) for e in edges})
    for u, v in cut:
        if not g.has_edge(u, v):
            raise UnknownEdge(f"{u}-{v} is not an edge")
    cut_set = set(cut)
    adj = [[w for w in nbrs if edge_key(v, w) not in cut_set] for v, nbrs in enumerate(g.rotation)]
    comps = components(g.n, adj)
    if len(comps) != 2:
        return None
    if not all(_has_cycle(c, adj) for c in comps):
        return None
    a, b = sorted((frozenset(c) for c in comps), key=min)
    return EdgeCutset(tuple(cut), a, b, classify_cutset(g, a, b, len(cut)))


# -- exhaustive search -------------------------------------------------------

def _cut_signatures(g: EmbeddedGraph) -> List[int]:
    """Per edge (in ``g.sorted_edges`` order) the set of fundamental cycles through it.

    An edge set is an edge cut exactly when the XOR of its signatures is 0.
    """
    edges = g.sorted_edges
    index = {e: i for i, e in enumerate(edges)}
    parent = {0: -1}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.rotation[v]:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
    sig = [0] * len(edges)
    bit = 0
    for e in edges:
        u, w = e
        if parent.get(u) == w or parent.get(w) == u:
            continue
        mask = 1 << bit
        bit += 1
        sig[index[e]] |= mask
        while u != w:
            if depth[u] < depth[w]:
                u, w = w, u
            sig[index[edge_key(u, parent[u])]] |= mask
            u = parent[u]
    return sig


def edge_cuts_of_size(g: EmbeddedGraph, k: int) -> Iterator[Tuple[Edge, ...]]:
    """Every ``k``-subset of edges that is an edge cut (coboundary), in lexicographic order."""
    edges = g.sorted_edges
    sig = _cut_signatures(g)
    m = len(edges)
    by_sig: Dict[int, List[int]] = {}
    for i, s in enumerate(sig):
        by_sig.setdefault(s, []).append(i)

    def rec(start: int, depth: int, acc: int, chosen: List[int]) -> Iterator[Tuple[Edge, ...]]:
        if depth == k - 1:
            last = chosen[-1] if chosen else -1
            for i in by_sig.get(acc, ()):
                if i > last:
                    yield tuple(edges[j] for j in chosen + [i])
            return
        for i in range(start, m - (k - 1 - depth)):
            chosen.append(i)
            yield from rec(i + 1, depth + 1, acc ^ sig[i], chosen)
            chosen.pop()

    if k >= 1:
        yield from rec(0, 0, 0, [])


def cyclic_cutsets_of_size(g: EmbeddedGraph, k: int) -> Iterator[EdgeCutset]:
    for cand in edge_cuts_of_size(g, k):
        cs = is_cyclic_cutset(g, cand)
        if cs is not None:
            yield cs


def cyclic_edge_connectivity(g: EmbeddedGraph, max_k: int = 5) -> int:
    """Smallest ``k <= max_k`` admitting a cyclic ``k``-cutset."""
    for k in range(1, max_k + 1):
        for _ in cyclic_cutsets_of_size(g, k):
            return k
    raise SearchExhausted(f"no cyclic cutset with at most {max_k} edges")


def find_cyclic_5_cutsets_exhaustive(g: EmbeddedGraph, max_n: int = 40) -> List[EdgeCutset]:
    """Oracle: sweep all 5-edge subsets (budget ``n <= max_n``)."""
    if g.n > max_n:
        raise ValueError(f"exhaustive 5-subset search limited to n <= {max_n} (got {g.n})")
    return list(cyclic_cutsets_of_size(g, 5))


# -- structural enumeration --------------------------------------------------

def dual_five_cycles(emb: Embedding) -> List[Tuple[int, ...]]:
    """Rings of five faces: induced 5-cycles of the dual, one representative each.

    Each ring is returned starting at its smallest face index, oriented so the
    second face is smaller than the last.
    """
    dual = emb.dual
    rings = []
    for f0 in sorted(dual):
        def extend(path: List[int]) -> None:
            last = path[-1]
            if len(path) == 5:
                if f0 in dual[last] and path[1] < path[4]:
                    rings.append(tuple(path))
                return
            for h in sorted(dual[last]):
                if h <= f0 or h in path:
                    continue
                # only consecutive faces may touch
                if any(h in dual[p] for p in path[:-1] if not (len(path) == 4 and p == f0)):
                    continue
                path.append(h)
                extend(path)
                path.pop()

        extend([f0])
    return rings


def ring_cut_edges(emb: Embedding, ring: Sequence[int]) -> Tuple[Edge, ...]:
    """The edges shared by consecutive faces of a ring."""
    out = set()
    for i in range(len(ring)):
        a, b = emb.faces[ring[i]], emb.faces[ring[(i + 1) % len(ring)]]
        out.update(set(a.edges) & set(b.edges))
    return tuple(sorted(out))


def face_coboundary(g: EmbeddedGraph, face: Face) -> Tuple[Edge, ...]:
    """Edges with exactly one endpoint on the face."""
    vs = face.vertices
    return tuple(sorted({edge_key(v, w) for v in face.boundary for w in g.rotation[v] if w not in vs}))


def find_cyclic_5_cutsets(g: EmbeddedGraph, emb: Optional[Embedding] = None) -> List[EdgeCutset]:
    """Structural enumeration from pentagon coboundaries and rings of five faces."""
    emb = emb or Embedding(g)
    candidates: Set[Tuple[Edge, ...]] = set()
    for f in emb.faces:
        if f.length == 5:
            candidates.add(face_coboundary(g, f))
    for ring in dual_five_cycles(emb):
        cut = ring_cut_edges(emb, ring)
        if len(cut) == 5:
            candidates.add(cut)
    out = []
    for cand in sorted(candidates):
        cs = is_cyclic_cutset(g, cand)
        if cs is not None:
            out.append(cs)
    return out


def has_nontrivial_cyclic_5_cutset(g: EmbeddedGraph, emb: Optional[Embedding] = None) -> bool:
    return any(not cs.is_trivial for cs in find_cyclic_5_cutsets(g, emb))


# -- inside / outside of a cycle ---------------------------------------------

def outer_face_order(emb: Embedding) -> List[int]:
    """Faces ranked as candidates for the designated outer face.

    Longest face first; ties go to the lexicographically smallest sorted boundary.
    """
    return sorted(range(len(emb.faces)), key=lambda i: (-emb.faces[i].length, sorted(emb.faces[i].boundary)))


def check_cycle(g: EmbeddedGraph, cycle: Sequence[int]) -> None:
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise BadCycle("cycle repeats a vertex or is too short")
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % len(cycle)]):
            raise BadCycle(f"{v}-{cycle[(i + 1) % len(cycle)]} is not an edge")


def cycle_face_sides(emb: Embedding, cycle: Sequence[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Split the faces by a simple cycle into ``(inside, outside)``.

    The outside is the side holding the first face of :func:`outer_face_order`.
    """
    check_cycle(emb.graph, cycle)
    cyc_edges = {edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    first = outer_face_order(emb)[0]
    seen = {first}
    stack = [first]
    while stack:
        f = stack.pop()
        for e in emb.faces[f].edges:
            if e in cyc_edges:
                continue
            for h in emb.edge_faces[e]:
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
    outside = frozenset(seen)
    inside = frozenset(range(len(emb.faces))) - outside
    if not inside:
        raise BadCycle("cycle does not separate the faces")
    return inside, outside


def cycle_vertex_sides(emb: Embedding, cycle: Sequence[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """``(Ins(C), Out(C))`` as vertex sets, cycle vertices excluded."""
    inside, outside = cycle_face_sides(emb, cycle)
    on = set(cycle)
    ins = frozenset(v for f in inside for v in emb.faces[f].boundary if v not in on)
    out = frozenset(v for f in outside for v in emb.faces[f].boundary if v not in on)
    return ins, out


def six_pentagons_inside(g: EmbeddedGraph, cycle: Sequence[int], outside: bool = False,
                         emb: Optional[Embedding] = None) -> int:
    """Pentagonal faces within ``V(C) ∪ Ins(C)`` of a 10-cycle with five inward attachments.

    With ``outside=True`` the roles of the two sides are swapped.
    """
    emb = emb or Embedding(g)
    if len(cycle) != 10:
        raise BadCycle(f"expected a 10-cycle, got length {len(cycle)}")
    inside_faces, outside_faces = cycle_face_sides(emb, cycle)
    ins, out = cycle_vertex_sides(emb, cycle)
    faces, region = (outside_faces, out) if outside else (inside_faces, ins)
    on = set(cycle)
    attached = sum(1 for v in cycle if any(w in region for w in g.rotation[v] if w not in on))
    if attached != 5:
        raise BadCycle(f"{attached} cycle vertices attach to the chosen side, expected 5")
    return sum(1 for f in faces if emb.faces[f].length == 5)
