"""Rings of five faces, pentacaps and the nanotube decomposition."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .connectivity import (
    dual_five_cycles,
    find_cyclic_5_cutsets,
    outer_face_order,
    ring_cut_edges,
)
from .errors import DichotomyViolated, InconsistentStructure
from .graph import Edge, EmbeddedGraph, Embedding, edge_key

log = logging.getLogger(__name__)

# The six shapes a hexagonal ring with a 10-cycle on each side can take.
LISTED_RING_TYPES = ("01112", "01121", "00212", "00122", "02102", "11111")


def order_cycle(edges: Sequence[Edge]) -> Tuple[int, ...]:
    """Arrange the edges of a single cycle into a vertex sequence."""
    adj: Dict[int, List[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj or any(len(ws) != 2 for ws in adj.values()):
        raise InconsistentStructure("edge set is not a disjoint union of cycles")
    start = min(adj)
    seq = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        seq.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != len(adj):
        raise InconsistentStructure("edge set splits into several cycles")
    return tuple(seq)


def _regions(emb: Embedding, removed: FrozenSet[int]) -> List[FrozenSet[int]]:
    """Dual components of the faces outside ``removed``."""
    left = set(range(len(emb.faces))) - removed
    out = []
    while left:
        s = min(left)
        comp = {s}
        stack = [s]
        while stack:
            f = stack.pop()
            for h in emb.dual[f]:
                if h in left and h not in comp:
                    comp.add(h)
                    stack.append(h)
        left -= comp
        out.append(frozenset(comp))
    return out


def _interface_cycle(emb: Embedding, a: FrozenSet[int], b: FrozenSet[int]) -> Tuple[int, ...]:
    """The cycle of edges separating face sets ``a`` and ``b``."""
    edges = [e for e, fs in emb.edge_faces.items() if (fs[0] in a and fs[1] in b) or (fs[0] in b and fs[1] in a)]
    return order_cycle(edges)


def _canonical(js: Sequence[int]) -> Tuple[int, ...]:
    seqs = []
    for s in (tuple(js), tuple(reversed(js))):
        seqs += [s[i:] + s[:i] for i in range(len(s))]
    return min(seqs)


@dataclass(frozen=True)
class RingType:
    js: Tuple[int, ...]

    @property
    def canonical(self) -> Tuple[int, ...]:
        return _canonical(self.js)

    @property
    def name(self) -> str:
        return "".join(map(str, self.canonical))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingType):
            return self.canonical == other.canonical
        if isinstance(other, str):
            return self.name == "".join(map(str, _canonical([int(c) for c in other])))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)


class Dichotomy(str, enum.Enum):
    INNER_IS_FACE = "InnerIsFace"
    OUTER_IS_FACE = "OuterIsFace"
    ALL_HEX_TEN_TEN = "AllHexTenTen"


@dataclass(frozen=True)
class FaceRing:
    faces: Tuple[int, ...]
    inner_cycle: Tuple[int, ...]
    outer_cycle: Tuple[int, ...]
    inner_region: FrozenSet[int]
    outer_region: FrozenSet[int]
    cut_edges: Tuple[Edge, ...]

    @property
    def inner_len(self) -> int:
        return len(self.inner_cycle)

    @property
    def outer_len(self) -> int:
        return len(self.outer_cycle)


def make_ring(emb: Embedding, faces: Sequence[int]) -> FaceRing:
    """Materialise a dual 5-cycle with its inner and outer boundary cycles."""
    ring = frozenset(faces)
    regions = _regions(emb, ring)
    if len(regions) != 2:
        raise InconsistentStructure(f"ring {tuple(faces)} does not separate the faces in two")
    designated = next(f for f in outer_face_order(emb) if f not in ring)
    outer, inner = sorted(regions, key=lambda reg: designated not in reg)
    return FaceRing(
        faces=tuple(faces),
        inner_cycle=_interface_cycle(emb, ring, inner),
        outer_cycle=_interface_cycle(emb, ring, outer),
        inner_region=inner,
        outer_region=outer,
        cut_edges=ring_cut_edges(emb, faces),
    )


def find_face_rings(g: EmbeddedGraph, emb: Optional[Embedding] = None) -> List[FaceRing]:
    emb = emb or Embedding(g)
    return [make_ring(emb, faces) for faces in dual_five_cycles(emb)]


def _side_vertices(emb: Embedding, region: FrozenSet[int], cycle: Sequence[int]) -> FrozenSet[int]:
    on = set(cycle)
    return frozenset(v for f in region for v in emb.faces[f].boundary if v not in on)


def _face_js(emb: Embedding, faces: Sequence[int], cycle: Sequence[int], side: FrozenSet[int]) -> Tuple[int, ...]:
    """Per face: cycle vertices on it whose third neighbour is on ``side`` or on the cycle."""
    g = emb.graph
    pos = {v: i for i, v in enumerate(cycle)}
    m = len(cycle)
    js = []
    for f in faces:
        j = 0
        for v in emb.faces[f].boundary:
            if v not in pos:
                continue
            i = pos[v]
            along = {cycle[(i + 1) % m], cycle[(i - 1) % m]}
            third = [w for w in g.rotation[v] if w not in along]
            if third and (third[0] in side or third[0] in pos):
                j += 1
        js.append(j)
    return tuple(js)


def ring_type(g: EmbeddedGraph, ring: FaceRing, side: str = "inner", emb: Optional[Embedding] = None) -> RingType:
    emb = emb or Embedding(g)
    if side == "inner":
        cycle, region = ring.inner_cycle, ring.inner_region
    elif side == "outer":
        cycle, region = ring.outer_cycle, ring.outer_region
    else:
        raise ValueError("side must be 'inner' or 'outer'")
    return RingType(_face_js(emb, ring.faces, cycle, _side_vertices(emb, region, cycle)))


def check_ring_dichotomy(g: EmbeddedGraph, ring: FaceRing, emb: Optional[Embedding] = None) -> Dichotomy:
    emb = emb or Embedding(g)
    if len(ring.inner_region) == 1:
        return Dichotomy.INNER_IS_FACE
    if len(ring.outer_region) == 1:
        return Dichotomy.OUTER_IS_FACE
    if all(emb.faces[f].length == 6 for f in ring.faces) and ring.inner_len == ring.outer_len == 10:
        return Dichotomy.ALL_HEX_TEN_TEN
    raise DichotomyViolated(
        f"ring {ring.faces}: lengths {[emb.faces[f].length for f in ring.faces]}, "
        f"l={ring.inner_len}, l'={ring.outer_len}"
    )


# -- pentacaps ---------------------------------------------------------------

@dataclass(frozen=True)
class Pentacap:
    center: int
    petals: Tuple[int, ...]
    vertices: FrozenSet[int]
    boundary: Tuple[int, ...]


def _pentacap(emb: Embedding, center: int) -> Optional[Pentacap]:
    if emb.faces[center].length != 5:
        return None
    nbrs = list(emb.dual[center])
    if len(nbrs) != 5 or any(emb.faces[f].length != 5 for f in nbrs):
        return None
    # petals in the cyclic order of the central pentagon's edges
    petals = []
    for e in emb.faces[center].edges:
        petals += [f for f in emb.edge_faces[e] if f != center]
    cap = frozenset(petals) | {center}
    vertices = frozenset(v for f in cap for v in emb.faces[f].boundary)
    rest = frozenset(range(len(emb.faces))) - cap
    return Pentacap(center, tuple(petals), vertices, _interface_cycle(emb, cap, rest))


def find_pentacaps(g: EmbeddedGraph, emb: Optional[Embedding] = None) -> List[Pentacap]:
    """Pentagonal faces whose five neighbours are all pentagons."""
    emb = emb or Embedding(g)
    return [cap for cap in (_pentacap(emb, f) for f in range(len(emb.faces))) if cap is not None]


# -- nanotube decomposition --------------------------------------------------

FaceLabel = Tuple  # ("P",), ("A", k), ("H", i, k), ("B", k), ("Q",)


@dataclass(frozen=True)
class NanotubeDecomposition:
    """Two pentacaps joined by ``r`` hexagonal rings, with ring coordinates.

    ``cycles[i][j]`` is the vertex ``v_i^j``.  Spokes join ``v_i^j`` and
    ``v_{i+1}^j`` for ``j = i (mod 2)``; the first cap's centre vertex
    ``a[k]`` hangs off ``v_0^{2k+1}`` and the second cap's ``b[k]`` off
    ``v_r^{2k + (r mod 2)}``.
    """

    graph: EmbeddedGraph
    cycles: Tuple[Tuple[int, ...], ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.cycles) - 1

    @property
    def n(self) -> int:
        return self.graph.n

    def v(self, i: int, j: int) -> int:
        return self.cycles[i][j % 10]

    @cached_property
    def embedding(self) -> Embedding:
        return Embedding(self.graph)

    def labels(self) -> List[FaceLabel]:
        out: List[FaceLabel] = [("P",)] + [("A", k) for k in range(5)]
        out += [("H", i, k) for i in range(self.r) for k in range(5)]
        out += [("B", k) for k in range(5)] + [("Q",)]
        return out

    def face_vertices(self, label: FaceLabel) -> FrozenSet[int]:
        kind = label[0]
        if kind == "P":
            return frozenset(self.a)
        if kind == "Q":
            return frozenset(self.b)
        if kind == "A":
            k = label[1] % 5
            return frozenset([self.a[k], self.a[(k + 1) % 5]] + [self.v(0, 2 * k + 1 + t) for t in range(3)])
        if kind == "B":
            k, q = label[1] % 5, self.r % 2
            return frozenset([self.b[k], self.b[(k + 1) % 5]] + [self.v(self.r, 2 * k + q + t) for t in range(3)])
        if kind == "H":
            i, k = label[1], label[2] % 5
            p = i % 2
            return frozenset(self.v(i + d, 2 * k + p + t) for d in (0, 1) for t in range(3))
        raise ValueError(f"unknown face label {label!r}")

    @cached_property
    def face_of_label(self) -> Dict[FaceLabel, int]:
        idx = self.embedding.face_index
        out = {}
        for lab in self.labels():
            vs = self.face_vertices(lab)
            if vs not in idx:
                raise InconsistentStructure(f"label {lab} does not name a face")
            out[lab] = idx[vs]
        return out

    @cached_property
    def label_of_face(self) -> Dict[int, FaceLabel]:
        return {f: lab for lab, f in self.face_of_label.items()}

    @property
    def cap_a(self) -> Pentacap:
        cap = _pentacap(self.embedding, self.face_of_label[("P",)])
        assert cap is not None
        return cap

    @property
    def cap_b(self) -> Pentacap:
        cap = _pentacap(self.embedding, self.face_of_label[("Q",)])
        assert cap is not None
        return cap

    def summary(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "cap_a_center": sorted(self.a),
            "cap_b_center": sorted(self.b),
            "cycles": [list(c) for c in self.cycles],
        }


def _walk(emb: Embedding, cycle: Tuple[int, ...], region: FrozenSet[int]) -> Tuple[List[Tuple[int, ...]], int]:
    """Peel hexagonal rings off ``region`` starting at ``cycle`` until a pentacap remains.

    Returns the successive 10-cycles met on the way and the cap's centre face.
    """
    cycles: List[Tuple[int, ...]] = []
    cyc_edges = {edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    visited_vertices = set(range(emb.graph.n)) - {v for f in region for v in emb.faces[f].boundary}
    while True:
        layer = frozenset(f for f in region if any(e in cyc_edges for e in emb.faces[f].edges))
        rest = region - layer
        lengths = sorted(emb.faces[f].length for f in layer)
        if len(layer) == 5 and lengths == [5] * 5 and len(rest) == 1:
            (center,) = rest
            if emb.faces[center].length != 5:
                raise InconsistentStructure("cap centre is not a pentagon")
            return cycles, center
        if len(layer) != 5 or lengths != [6] * 5:
            raise InconsistentStructure(f"layer after cycle {cycle} has face lengths {lengths}")
        order = next((c for c in dual_five_cycles_within(emb, layer)), None)
        if order is None:
            raise InconsistentStructure("hexagonal layer is not a ring of five faces")
        rtype = RingType(_face_js(emb, order, cycle, frozenset(visited_vertices) - set(cycle)))
        log.debug("descent ring %s of type (%s)", order, rtype.name)
        if rtype.name != "11111":
            raise InconsistentStructure(f"hexagonal ring of type ({rtype.name}) met during descent")
        nxt = _interface_cycle(emb, layer, rest)
        if len(nxt) != 10:
            raise InconsistentStructure(f"ring boundary of length {len(nxt)}")
        visited_vertices |= {v for f in layer for v in emb.faces[f].boundary}
        cycles.append(nxt)
        cycle = nxt
        cyc_edges = {edge_key(cycle[i], cycle[(i + 1) % 10]) for i in range(10)}
        region = rest


def dual_five_cycles_within(emb: Embedding, faces: FrozenSet[int]) -> List[Tuple[int, ...]]:
    """Cyclic orders of a 5-face set forming a ring (at most one for a real ring)."""
    fs = sorted(faces)
    start = fs[0]
    out = []

    def extend(path: List[int]) -> None:
        if len(path) == 5:
            if start in emb.dual[path[-1]] and path[1] < path[4]:
                out.append(tuple(path))
            return
        for h in sorted(emb.dual[path[-1]]):
            if h in faces and h not in path:
                path.append(h)
                extend(path)
                path.pop()

    extend([start])
    return out


def _is_dodecahedron(emb: Embedding) -> bool:
    return emb.graph.n == 20 and all(f.length == 5 for f in emb.faces)


def nanotube_decomposition(g: EmbeddedGraph, emb: Optional[Embedding] = None) -> Optional[NanotubeDecomposition]:
    """Two antipodal pentacaps and the hexagonal rings between them.

    Returns ``None`` when ``g`` has only trivial cyclic 5-cutsets and is not
    the dodecahedron.
    """
    emb = emb or Embedding(g)
    if _is_dodecahedron(emb):
        cap = _pentacap(emb, min(range(12), key=lambda f: sorted(emb.faces[f].boundary)))
        assert cap is not None
        inside = frozenset(cap.petals) | {cap.center}
        start = cap.boundary
        side1, side2 = inside, frozenset(range(12)) - inside
    else:
        nontrivial = [cs for cs in find_cyclic_5_cutsets(g, emb) if not cs.is_trivial]
        if not nontrivial:
            return None
        ring = _ring_of_cut(emb, nontrivial[0].edges)
        arm = check_ring_dichotomy(g, ring, emb)
        if arm is not Dichotomy.ALL_HEX_TEN_TEN:
            raise InconsistentStructure(f"nontrivial cutset ring falls in arm {arm.value}")
        start = ring.inner_cycle
        side1 = ring.inner_region
        side2 = frozenset(range(len(emb.faces))) - side1
    cycles1, center1 = _walk(emb, start, side1)
    cycles2, center2 = _walk(emb, start, side2)
    path = list(reversed(cycles1)) + [start] + cycles2
    centers = [center1, center2]
    if sorted(emb.faces[center2].boundary) < sorted(emb.faces[center1].boundary):
        path.reverse()
        centers.reverse()
    caps = [_pentacap(emb, c) for c in centers]
    if any(c is None for c in caps):
        raise InconsistentStructure("descent did not end in a pentacap")
    if set(path[0]) != set(caps[0].boundary) or set(path[-1]) != set(caps[1].boundary):
        raise InconsistentStructure("cap boundaries do not close the tube")
    dec = _coordinates(g, path, set(emb.faces[centers[0]].boundary), set(emb.faces[centers[1]].boundary))
    if g.n != 10 * dec.r + 20:
        raise InconsistentStructure(f"n={g.n} but r={dec.r}")
    dec.face_of_label  # every coordinate face must exist
    return dec


def _ring_of_cut(emb: Embedding, cut: Tuple[Edge, ...]) -> FaceRing:
    for faces in dual_five_cycles(emb):
        if ring_cut_edges(emb, faces) == cut:
            return make_ring(emb, faces)
    raise InconsistentStructure(f"no ring of five faces realises cutset {cut}")


def _coordinates(g: EmbeddedGraph, path: List[Tuple[int, ...]], center_a: set, center_b: set) -> NanotubeDecomposition:
    r = len(path) - 1
    c0 = path[0]
    c0_set = set(c0)

    def third(v: int, cyc: set) -> int:
        (w,) = [w for w in g.rotation[v] if w not in cyc]
        return w

    outward = [v for v in c0 if third(v, c0_set) not in center_a]
    v00 = min(outward)
    rot = g.rotation[v00]
    out_nbr = third(v00, c0_set)
    v01 = rot[(rot.index(out_nbr) + 1) % 3]
    # walk C_0 from v00 through v01
    seq = [v00, v01]
    while len(seq) < 10:
        u = seq[-1]
        (w,) = [w for w in g.rotation[u] if w in c0_set and w != seq[-2]]
        seq.append(w)
    cycles = [tuple(seq)]
    for i in range(1, r + 1):
        prev = cycles[-1]
        cur = set(path[i])
        p = (i - 1) % 2
        row: List[Optional[int]] = [None] * 10
        for j in range(p, 10, 2):
            w = third(prev[j], set(prev))
            if w not in cur:
                raise InconsistentStructure(f"spoke from v_{i - 1}^{j} misses C_{i}")
            row[j] = w
        for j in range(1 - p, 10, 2):
            common = set(g.rotation[row[(j - 1) % 10]]) & set(g.rotation[row[(j + 1) % 10]]) & cur
            if len(common) != 1:
                raise InconsistentStructure(f"cannot place v_{i}^{j}")
            row[j] = common.pop()
        cycles.append(tuple(row))
    a = []
    for k in range(5):
        w = third(cycles[0][2 * k + 1], c0_set)
        if w not in center_a:
            raise InconsistentStructure("first cap centre misattached")
        a.append(w)
    q = r % 2
    last = set(cycles[-1])
    b = []
    for k in range(5):
        w = third(cycles[-1][2 * k + q], last)
        if w not in center_b:
            raise InconsistentStructure("second cap centre misattached")
        b.append(w)
    return NanotubeDecomposition(g, tuple(cycles), tuple(a), tuple(b))
