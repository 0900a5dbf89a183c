"""Embedded cubic planar graphs given as rotation systems.

Vertices are dense integer ids ``0..n-1``.  ``rotation[v]`` lists the
neighbours of ``v`` in counterclockwise order.  Faces are traced with the
rule: from dart ``u -> v`` continue with ``v -> w`` where ``w`` immediately
precedes ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import Acyclic, NonCubic, RotationInconsistent, TraversalDiverged

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EmbeddedGraph:
    rotation: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rot = tuple(tuple(int(w) for w in nbrs) for nbrs in self.rotation)
        object.__setattr__(self, "rotation", rot)
        n = len(rot)
        for v, nbrs in enumerate(rot):
            if len(set(nbrs)) != len(nbrs):
                raise RotationInconsistent(f"vertex {v} lists a neighbour twice")
            for w in nbrs:
                if not 0 <= w < n:
                    raise RotationInconsistent(f"vertex {v} has out-of-range neighbour {w}")
                if w == v:
                    raise RotationInconsistent(f"loop at vertex {v}")
                if v not in rot[w]:
                    raise RotationInconsistent(f"edge {v}-{w} is not symmetric")

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(v, w) for v, nbrs in enumerate(self.rotation) for w in nbrs)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _position(self) -> Dict[Edge, int]:
        # (v, w) -> index of w in rotation[v]
        return {(v, w): i for v, nbrs in enumerate(self.rotation) for i, w in enumerate(nbrs)}

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._position

    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self.rotation)

    def next_dart(self, u: int, v: int) -> Edge:
        nbrs = self.rotation[v]
        return v, nbrs[(self._position[(v, u)] - 1) % len(nbrs)]

    def reflected(self) -> "EmbeddedGraph":
        """The mirror-image embedding (every rotation reversed)."""
        return EmbeddedGraph(tuple(tuple(reversed(nbrs)) for nbrs in self.rotation))

    def without_edge(self, u: int, v: int) -> "EmbeddedGraph":
        rot = [list(nbrs) for nbrs in self.rotation]
        rot[u].remove(v)
        rot[v].remove(u)
        return EmbeddedGraph(tuple(tuple(r) for r in rot))

    def relabeled(self, perm: Sequence[int]) -> "EmbeddedGraph":
        """Rename vertex ``v`` to ``perm[v]``."""
        rot: List[Tuple[int, ...]] = [()] * self.n
        for v, nbrs in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[w] for w in nbrs)
        return EmbeddedGraph(tuple(rot))


@dataclass(frozen=True)
class Face:
    boundary: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.boundary)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        b = self.boundary
        return tuple(edge_key(b[i], b[(i + 1) % len(b)]) for i in range(len(b)))


def _normalize_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


def _trace(g: EmbeddedGraph) -> List[Face]:
    used = set()
    faces = []
    limit = 2 * len(g.edges)
    for u, nbrs in enumerate(g.rotation):
        for v in nbrs:
            if (u, v) in used:
                continue
            start = (u, v)
            dart = start
            walk = []
            while True:
                if dart in used:
                    raise TraversalDiverged(f"dart {dart} reached twice")
                used.add(dart)
                walk.append(dart[0])
                dart = g.next_dart(*dart)
                if dart == start:
                    break
                if len(walk) > limit:
                    raise TraversalDiverged("face walk did not close")
            faces.append(Face(_normalize_cycle(walk)))
    return faces


def trace_faces(g: EmbeddedGraph) -> List[Face]:
    """All faces of the embedding, each dart used exactly once."""
    bad = [v for v in range(g.n) if g.degree(v) != 3]
    if bad:
        raise NonCubic(f"vertices with degree != 3: {bad[:10]}")
    return _trace(g)


def adjacency_sets(g: EmbeddedGraph) -> List[set]:
    return [set(nbrs) for nbrs in g.rotation]


def components(n: int, adj: Sequence[Iterable[int]], removed: Iterable[int] = ()) -> List[List[int]]:
    """Connected components of the graph with ``removed`` vertices dropped."""
    seen = [False] * n
    for v in removed:
        seen[v] = True
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_connected(g: EmbeddedGraph) -> bool:
    return g.n > 0 and len(components(g.n, g.rotation)) == 1


def _has_articulation(n: int, adj: Sequence[Sequence[int]], skip: int) -> bool:
    """True if the graph minus ``skip`` is disconnected or has a cut vertex."""
    root = 0 if skip != 0 else 1
    disc = [-1] * n
    low = [0] * n
    disc[skip] = -2
    timer = 0
    disc[root] = low[root] = timer
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip or w == parent:
                continue
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if p == root:
                root_children += 1
            elif low[v] >= disc[p]:
                return True
    if root_children > 1:
        return True
    return any(disc[v] == -1 for v in range(n))


def is_3_connected(g: EmbeddedGraph) -> bool:
    """Vertex 3-connectivity: no single vertex or vertex pair separates the graph.

    For every vertex ``u`` the graph ``g - u`` is checked for cut vertices,
    which covers all pairs ``{u, v}``.
    """
    n = g.n
    if n < 4 or not is_connected(g):
        return False
    return not any(_has_articulation(n, g.rotation, u) for u in range(n))


def is_3_connected_bruteforce(g: EmbeddedGraph) -> bool:
    """Delete every vertex pair and test connectivity of what remains."""
    n = g.n
    if n < 4 or not is_connected(g):
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if len(components(n, g.rotation, (u, v))) != 1:
                return False
    return True


def girth(g: EmbeddedGraph) -> int:
    """Length of a shortest cycle, by breadth-first search from every vertex."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for w in g.rotation[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise Acyclic("graph has no cycle")
    return best


@dataclass(frozen=True)
class FullereneReport:
    n: int
    is_cubic: bool
    is_connected: bool
    is_planar_embedding: bool
    is_3_connected: bool
    pentagon_count: int
    hexagon_count: int
    other_face_count: int
    girth: Optional[int]

    @property
    def is_fullerene(self) -> bool:
        return (
            self.is_cubic
            and self.is_connected
            and self.is_planar_embedding
            and self.is_3_connected
            and self.other_face_count == 0
            and self.pentagon_count == 12
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "is_cubic": self.is_cubic,
            "is_connected": self.is_connected,
            "is_planar_embedding": self.is_planar_embedding,
            "is_3_connected": self.is_3_connected,
            "pentagon_count": self.pentagon_count,
            "hexagon_count": self.hexagon_count,
            "other_face_count": self.other_face_count,
            "girth": self.girth,
            "is_fullerene": self.is_fullerene,
        }


def validate_fullerene(g: EmbeddedGraph) -> FullereneReport:
    """Diagnose every fullerene axiom; never raises on a bad graph."""
    cubic = g.is_cubic()
    connected = is_connected(g)
    try:
        faces = _trace(g)
    except TraversalDiverged:
        faces = []
    planar = bool(faces) and connected and g.n - len(g.edges) + len(faces) == 2
    lengths = Counter(f.length for f in faces)
    try:
        gi: Optional[int] = girth(g) if g.n else None
    except Acyclic:
        gi = None
    return FullereneReport(
        n=g.n,
        is_cubic=cubic,
        is_connected=connected,
        is_planar_embedding=planar,
        is_3_connected=is_3_connected(g),
        pentagon_count=lengths[5],
        hexagon_count=lengths[6],
        other_face_count=sum(c for k, c in lengths.items() if k not in (5, 6)),
        girth=gi,
    )


def edge_faces(faces: Sequence[Face]) -> Dict[Edge, List[int]]:
    """Map every edge to the indices of the faces on its two sides."""
    out: Dict[Edge, List[int]] = {}
    for i, f in enumerate(faces):
        for e in f.edges:
            out.setdefault(e, []).append(i)
    return out


def dual_graph(faces: Sequence[Face]) -> Dict[int, Dict[int, int]]:
    """Face adjacency with the number of shared edges as multiplicity."""
    dual: Dict[int, Dict[int, int]] = {i: {} for i in range(len(faces))}
    for e, (a, *rest) in edge_faces(faces).items():
        for b in rest:
            if a != b:
                dual[a][b] = dual[a].get(b, 0) + 1
                dual[b][a] = dual[b].get(a, 0) + 1
    return dual


@dataclass(frozen=True)
class Embedding:
    """A graph bundled with its traced faces and derived lookups."""

    graph: EmbeddedGraph
    faces: Tuple[Face, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "faces", tuple(trace_faces(self.graph)))

    @cached_property
    def dual(self) -> Dict[int, Dict[int, int]]:
        return dual_graph(self.faces)

    @cached_property
    def edge_faces(self) -> Dict[Edge, List[int]]:
        return edge_faces(self.faces)

    @cached_property
    def face_index(self) -> Dict[FrozenSet[int], int]:
        return {f.vertices: i for i, f in enumerate(self.faces)}

    @cached_property
    def vertex_faces(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.graph.n)]
        for i, f in enumerate(self.faces):
            for v in f.boundary:
                out[v].append(i)
        return out
