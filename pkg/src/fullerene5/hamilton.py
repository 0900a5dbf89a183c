"""Hamilton cycles of capped nanotubes built from paths of faces.

A path of faces whose union is a disc touching every vertex has a Hamilton
cycle as its boundary.  For a tube with ``r`` hexagonal rings the paths used
here zigzag along the tube: layers of five faces (petals, rings, petals)
alternately contribute four consecutive faces going around and one face
crossing over.  Odd ``r`` starts with a cap centre and one petal at both ends
(four pentagons); even ``r`` takes four petals of the first cap and a petal
plus the centre of the second (six pentagons).

Paths for ``r <= 2`` come from fixed templates.  Larger tubes are contracted
by one ring, solved, and the path is rewritten across the reinstated ring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import BudgetExceeded, NoRings, NotSingleCycle, NotSpanning, PatternMismatch
from .graph import Edge, EmbeddedGraph, Embedding, edge_key
from .rings import FaceLabel, NanotubeDecomposition, _coordinates


@dataclass(frozen=True)
class FacePath:
    faces: Tuple[int, ...]
    pentagon_count: int
    shared_edges: Tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class HamiltonCycle:
    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if len(vs) > 2 and vs[1] > vs[-1]:
            vs = (vs[0],) + tuple(reversed(vs[1:]))
        object.__setattr__(self, "vertices", vs)

    @property
    def edges(self) -> FrozenSet[Edge]:
        vs = self.vertices
        return frozenset(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __len__(self) -> int:
        return len(self.vertices)


def make_face_path(emb: Embedding, faces: Sequence[int]) -> FacePath:
    """Wrap a face sequence, checking that consecutive faces share an edge."""
    faces = tuple(faces)
    if len(set(faces)) != len(faces):
        raise ValueError("face path repeats a face")
    shared = []
    for f, h in zip(faces, faces[1:]):
        common = set(emb.faces[f].edges) & set(emb.faces[h].edges)
        if not common:
            raise ValueError(f"faces {f} and {h} are not adjacent")
        shared.extend(sorted(common))
    pent = sum(1 for f in faces if emb.faces[f].length == 5)
    return FacePath(faces, pent, tuple(shared))


def face_path_boundary(g: EmbeddedGraph, path: FacePath, emb: Optional[Embedding] = None) -> HamiltonCycle:
    """The boundary of the union of the path's faces, required to be a spanning cycle."""
    emb = emb or Embedding(g)
    counts = Counter(e for f in path.faces for e in emb.faces[f].edges)
    boundary = [e for e, c in counts.items() if c == 1]
    adj: Dict[int, List[int]] = {}
    for u, v in boundary:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj or any(len(ws) != 2 for ws in adj.values()):
        raise NotSingleCycle("boundary has a vertex of degree other than 2")
    start = min(adj)
    seq = [start]
    prev, cur = start, adj[start][0]
    while cur != start:
        seq.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != len(adj):
        raise NotSingleCycle(f"boundary splits into several cycles ({len(seq)} of {len(adj)} vertices in one)")
    if len(seq) != g.n:
        raise NotSpanning(f"boundary cycle has {len(seq)} of {g.n} vertices")
    return HamiltonCycle(tuple(seq))


def verify_hamilton(g: EmbeddedGraph, hc: HamiltonCycle) -> bool:
    vs = hc.vertices
    if len(vs) != g.n or len(set(vs)) != g.n:
        return False
    return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


# -- contraction -------------------------------------------------------------

def _kept(d: NanotubeDecomposition) -> List[int]:
    gone = set(d.cycles[1])
    return [v for v in range(d.n) if v not in gone]


@lru_cache(maxsize=128)
def contract_ring(d: NanotubeDecomposition) -> NanotubeDecomposition:
    """Delete ``C_1`` and join each ``v_0^{2j}`` to the far neighbour of ``v_1^{2j-1}``.

    Surviving vertices keep their relative order and are renumbered densely.
    """
    if d.r == 0:
        raise NoRings("the dodecahedron has no ring to contract")
    g = d.graph
    c1 = set(d.cycles[1])
    rot = [list(nbrs) for nbrs in g.rotation]
    for j in range(5):
        top = d.v(0, 2 * j)
        mid = d.v(1, 2 * j - 1)
        (far,) = [w for w in g.rotation[mid] if w not in c1]
        rot[top][rot[top].index(d.v(1, 2 * j))] = far
        rot[far][rot[far].index(mid)] = top
    kept = _kept(d)
    new_id = {v: i for i, v in enumerate(kept)}
    new_rot = tuple(tuple(new_id[w] for w in rot[v]) for v in kept)
    ng = EmbeddedGraph(new_rot)
    path = [tuple(new_id[v] for v in d.cycles[0])] + [tuple(new_id[v] for v in c) for c in d.cycles[2:]]
    if d.r == 1:
        # the second cap's boundary was C_1; what remains of that cap is its centre
        path = path[:1]
    out = _coordinates(ng, path, {new_id[v] for v in d.a}, {new_id[v] for v in d.b})
    out.face_of_label  # every coordinate face must exist in the contracted graph
    return out


# -- face path templates -----------------------------------------------------

# Entries are (kind, offset) or ("H", ring, offset); offsets are added to the
# rotation parameter k (mod 5).  Each list is one base shape.
TEMPLATES: Dict[int, List[List[tuple]]] = {
    0: [
        [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 0), ("Q",)],
        [("A", -1), ("A", -2), ("A", -3), ("A", -4), ("B", 1), ("Q",)],
    ],
    1: [
        [("P",), ("A", 0), ("H", 0, 1), ("H", 0, 2), ("H", 0, 3), ("H", 0, 4), ("B", -1), ("Q",)],
        [("P",), ("A", 0), ("H", 0, 0), ("H", 0, -1), ("H", 0, -2), ("H", 0, -3), ("B", 1), ("Q",)],
    ],
    2: [
        [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("H", 0, 0),
         ("H", 1, -1), ("H", 1, -2), ("H", 1, -3), ("H", 1, -4), ("B", 1), ("Q",)],
        [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("H", 0, 0),
         ("H", 1, 0), ("H", 1, 1), ("H", 1, 2), ("H", 1, 3), ("B", -1), ("Q",)],
        [("A", 3), ("A", 2), ("A", 1), ("A", 0), ("H", 0, 0),
         ("H", 1, 0), ("H", 1, 1), ("H", 1, 2), ("H", 1, 3), ("B", -1), ("Q",)],
        [("A", 3), ("A", 2), ("A", 1), ("A", 0), ("H", 0, 0),
         ("H", 1, -1), ("H", 1, -2), ("H", 1, -3), ("H", 1, -4), ("B", 1), ("Q",)],
    ],
}


def _instantiate(entry: tuple, k: int) -> FaceLabel:
    if entry[0] in ("P", "Q"):
        return entry
    if entry[0] == "H":
        return ("H", entry[1], (entry[2] + k) % 5)
    return (entry[0], (entry[1] + k) % 5)


def template_path(d: NanotubeDecomposition, shape: int = 0, k: int = 0) -> FacePath:
    labels = [_instantiate(e, k) for e in TEMPLATES[d.r][shape]]
    return make_face_path(d.embedding, [d.face_of_label[lab] for lab in labels])


# -- expansion across a reinstated ring --------------------------------------

def expected_pentagons(r: int) -> int:
    return 4 if r % 2 else 6


def _lift(d: NanotubeDecomposition, dbar: NanotubeDecomposition) -> Tuple[Dict[int, int], Dict[int, Tuple[int, int]]]:
    """Map faces of the contracted tube back to ``d``.

    Returns ``plain`` (face -> identical face of ``d``) and ``merged``
    (face -> (upper, lower)) for the five faces that absorbed the deleted ring.
    """
    kept = _kept(d)
    emb, embar = d.embedding, dbar.embedding
    c0 = set(d.cycles[0])
    c1 = set(d.cycles[1])
    plain: Dict[int, int] = {}
    merged: Dict[int, Tuple[int, int]] = {}
    for i, f in enumerate(embar.faces):
        vs = frozenset(kept[v] for v in f.boundary)
        if vs in emb.face_index:
            plain[i] = emb.face_index[vs]
            continue
        top = vs & c0
        low = vs - c0
        upper = [h for h in emb.vertex_faces[next(iter(top))] if top <= emb.faces[h].vertices and emb.faces[h].vertices & c1]
        lower = [h for h in emb.vertex_faces[next(iter(low))] if low <= emb.faces[h].vertices and emb.faces[h].vertices & c1]
        if len(upper) != 1 or len(lower) != 1:
            raise PatternMismatch(f"contracted face {i} has no unique preimage")
        merged[i] = (upper[0], lower[0])
    return plain, merged


def _runs(labels_by_k: Dict[int, int], length: int) -> List[List[int]]:
    """All runs of ``length`` consecutive faces around a 5-face layer, both directions."""
    return [[labels_by_k[(s + step * t) % 5] for t in range(length)] for s in range(5) for step in (1, -1)]


def expansion_options(path: FacePath, d: NanotubeDecomposition) -> List[FacePath]:
    """Every valid rewrite of a contracted-tube path into ``d``, lexicographically sorted."""
    dbar = contract_ring(d)
    embar = dbar.embedding
    plain, merged = _lift(d, dbar)
    lab = dbar.label_of_face

    def zone(f: int) -> bool:
        return lab[f][0] in ("P", "A") or f in merged

    faces = list(path.faces)
    if not zone(faces[0]):
        faces.reverse()
    kinds = [lab[f][0] for f in faces]
    emb = d.embedding
    petals = {k: d.face_of_label[("A", k)] for k in range(5)}
    hexes0 = {k: d.face_of_label[("H", 0, k)] for k in range(5)}
    candidates: List[List[int]] = []

    if dbar.r % 2 == 1:
        # centre, petal, four merged faces  ->  four petals, one ring-0 hexagon, four ring-1 faces
        if kinds[:2] != ["P", "A"] or not all(f in merged for f in faces[2:6]):
            raise PatternMismatch(f"expected centre, petal and four merged faces, got {[lab[f] for f in faces[:6]]}")
        lows = [merged[f][1] for f in faces[2:6]]
        tail = lows + [plain[f] for f in faces[6:]]
        for u in hexes0.values():
            if lows[0] not in emb.dual[u]:
                continue
            for run in _runs(petals, 4):
                if u in emb.dual[run[-1]]:
                    candidates.append(run + [u] + tail)
    else:
        # four petals, one merged face  ->  centre, petal, four ring-0 hexagons, one ring-1 face
        if kinds[:4] != ["A"] * 4 or faces[4] not in merged:
            raise PatternMismatch(f"expected four petals and a merged face, got {[lab[f] for f in faces[:5]]}")
        low = merged[faces[4]][1]
        tail = [low] + [plain[f] for f in faces[5:]]
        centre = d.face_of_label[("P",)]
        for run in _runs(hexes0, 4):
            if low not in emb.dual[run[-1]]:
                continue
            for petal in petals.values():
                if run[0] in emb.dual[petal]:
                    candidates.append([centre, petal] + run + tail)

    out = {}
    for cand in candidates:
        try:
            fp = make_face_path(emb, cand)
            face_path_boundary(d.graph, fp, emb)
        except (ValueError, NotSingleCycle, NotSpanning):
            continue
        if fp.pentagon_count == expected_pentagons(d.r):
            out[fp.faces] = fp
    if not out:
        raise PatternMismatch("no rewrite of the path spans the expanded tube")
    return [out[k] for k in sorted(out)]


def expand_face_path(path: FacePath, d: NanotubeDecomposition, parity: Optional[int] = None) -> FacePath:
    """Rewrite a path of ``contract_ring(d)`` into ``d``; the least valid option wins."""
    if parity is not None and parity % 2 != d.r % 2:
        raise PatternMismatch(f"parity {parity} does not match r={d.r}")
    return expansion_options(path, d)[0]


def build_hamilton(d: NanotubeDecomposition) -> Tuple[FacePath, HamiltonCycle]:
    if d.r <= 2:
        path = template_path(d)
    else:
        sub_path, _ = build_hamilton(contract_ring(d))
        path = expand_face_path(sub_path, d)
    hc = face_path_boundary(d.graph, path, d.embedding)
    if path.pentagon_count != expected_pentagons(d.r):
        raise PatternMismatch(f"path has {path.pentagon_count} pentagons for r={d.r}")
    return path, hc


def variant_paths(d: NanotubeDecomposition) -> List[FacePath]:
    """Face paths reachable through every choice point of the construction."""
    if d.r <= 2:
        out = {}
        for shape in range(len(TEMPLATES[d.r])):
            for k in range(5):
                fp = template_path(d, shape, k)
                out[fp.faces] = fp
        return [out[key] for key in sorted(out)]
    out = {}
    for sub in variant_paths(contract_ring(d)):
        for fp in expansion_options(sub, d):
            out[fp.faces] = fp
    return [out[key] for key in sorted(out)]


def enumerate_hamilton_variants(d: NanotubeDecomposition) -> Set[HamiltonCycle]:
    cycles = set()
    for fp in variant_paths(d):
        hc = face_path_boundary(d.graph, fp, d.embedding)
        cycles.add(hc)
    return cycles


# -- exhaustive oracles ------------------------------------------------------

def _check_budget(g: EmbeddedGraph, max_n: int) -> None:
    if g.n > max_n:
        raise BudgetExceeded(f"n={g.n} exceeds the exhaustive-search budget {max_n}")


def hamilton_cycles(g: EmbeddedGraph, max_n: int = 40) -> Iterator[HamiltonCycle]:
    """All Hamilton cycles by extending a path from vertex 0, with degree pruning."""
    _check_budget(g, max_n)
    n = g.n
    if n < 3:
        return
    adj = g.rotation
    on_path = [False] * n
    on_path[0] = True
    path = [0]

    def starved(v: int, cur: int) -> bool:
        # an unvisited neighbour of v that can no longer get two path edges
        for u in adj[v]:
            if on_path[u] or u == cur:
                continue
            free = sum(1 for w in adj[u] if not on_path[w] or w == cur or w == 0)
            if free < 2:
                return True
        return False

    def rec(v: int) -> Iterator[HamiltonCycle]:
        if len(path) == n:
            if 0 in adj[v] and path[1] < path[-1]:
                yield HamiltonCycle(tuple(path))
            return
        for w in adj[v]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            if not starved(v, w):
                yield from rec(w)
            path.pop()
            on_path[w] = False

    yield from rec(0)


def _count_by_edges(g: EmbeddedGraph) -> int:
    """Hamilton cycles counted by include/exclude decisions on edges."""
    n = g.n
    edges = g.sorted_edges
    m = len(edges)
    deg = [g.degree(v) for v in range(n)]
    used = [0] * n
    dropped = [0] * n
    end = list(range(n))  # other endpoint of the path through an endpoint
    total = 0

    def rec(i: int, chosen: int) -> None:
        nonlocal total
        if chosen == n:
            total += 1
            return
        if i == m:
            return
        u, v = edges[i]
        # include
        if used[u] < 2 and used[v] < 2:
            eu, ev = end[u], end[v]
            closes = eu == v
            if not closes or chosen == n - 1:
                used[u] += 1
                used[v] += 1
                end[eu], end[ev] = ev, eu
                rec(i + 1, chosen + 1)
                end[eu], end[ev] = u, v
                if closes:
                    end[u], end[v] = v, u
                used[u] -= 1
                used[v] -= 1
        # exclude
        if deg[u] - dropped[u] > 2 and deg[v] - dropped[v] > 2:
            dropped[u] += 1
            dropped[v] += 1
            rec(i + 1, chosen)
            dropped[u] -= 1
            dropped[v] -= 1

    rec(0, 0)
    return total


def count_hamilton_by_edges(g: EmbeddedGraph, max_n: int = 40) -> int:
    _check_budget(g, max_n)
    return _count_by_edges(g) if g.n >= 3 else 0


def brute_force_hamilton(g: EmbeddedGraph, max_n: int = 40) -> Tuple[int, Optional[HamiltonCycle]]:
    """Exact number of distinct Hamilton cycles and the first one found."""
    count = 0
    witness = None
    for hc in hamilton_cycles(g, max_n):
        if witness is None:
            witness = hc
        count += 1
    return count, witness
