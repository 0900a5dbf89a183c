"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed together at
the end of the pytest run, and also when this file is executed directly.
"""

import time

import pytest

from fullerene5.connectivity import cyclic_cutsets_of_size, has_nontrivial_cyclic_5_cutset, six_pentagons_inside
from fullerene5.errors import DichotomyViolated
from fullerene5.formats import read_planar_code, read_text_rotation, write_planar_code, write_text_rotation
from fullerene5.generator import dodecahedron, nanotube
from fullerene5.graph import Embedding, trace_faces, validate_fullerene
from fullerene5.hamilton import (
    build_hamilton,
    contract_ring,
    count_hamilton_by_edges,
    enumerate_hamilton_variants,
    hamilton_cycles,
    verify_hamilton,
)
from fullerene5.matchings import (
    count_perfect_matchings,
    count_perfect_matchings_dp,
    matching_lower_bound,
    prior_matching_bound,
)
from fullerene5.rings import Dichotomy, check_ring_dichotomy, find_face_rings, find_pentacaps, nanotube_decomposition, ring_type

from conftest import DATA, c60

RESULTS = {}


def record(number, title, ok, detail):
    RESULTS[number] = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    assert ok, RESULTS[number]


def face_vector(g):
    lengths = [f.length for f in trace_faces(g)]
    return lengths.count(5), lengths.count(6), len(lengths)


def test_criterion_1_validation():
    start = time.perf_counter()
    bad = []
    for r in range(9):
        rep = validate_fullerene(nanotube(r))
        if not (rep.is_fullerene and rep.pentagon_count == 12 and rep.hexagon_count == 5 * r and rep.girth == 5):
            bad.append(r)
    elapsed = time.perf_counter() - start
    record(1, "girth and validation r=0..8", not bad and elapsed < 1.0,
           f"failures={bad}, {elapsed:.2f}s (limit 1s)")


def test_criterion_2_cyclic_connectivity():
    start = time.perf_counter()
    found = {}
    for r in range(3):
        g = nanotube(r)
        small = [k for k in range(1, 5) if next(cyclic_cutsets_of_size(g, k), None) is not None]
        five = next(cyclic_cutsets_of_size(g, 5), None) is not None
        found[r] = (small, five)
    elapsed = time.perf_counter() - start
    ok = all(not small and five for small, five in found.values()) and elapsed < 120
    record(2, "cyclic edge-connectivity exactly 5 for r=0..2", ok,
           f"sizes<=4 with cyclic cutsets: {[found[r][0] for r in range(3)]}, "
           f"size 5 present: {[found[r][1] for r in range(3)]}, {elapsed:.1f}s (limit 120s)")


def test_criterion_3_equivalence():
    rows = []
    for r in range(6):
        g = nanotube(r)
        rows.append((f"r={r}", has_nontrivial_cyclic_5_cutset(g), nanotube_decomposition(g) is not None))
    g = c60()
    rows.append(("C60", has_nontrivial_cyclic_5_cutset(g), nanotube_decomposition(g) is not None))
    caps = len(find_pentacaps(g))
    disagree = [name for name, cut, dec in rows if cut != dec]
    positives_ok = all(dec for name, _, dec in rows[:-1])
    ok = not disagree and positives_ok and not rows[-1][2] and caps == 0
    record(3, "nontrivial cyclic 5-cutset iff nanotube decomposition", ok,
           f"disagreements={disagree}, C60 pentacaps={caps}")


def test_criterion_4_dichotomy():
    corpus = {"dodecahedron": dodecahedron(), "C60": c60()}
    corpus.update({f"r={r}": nanotube(r) for r in range(6)})
    violations, rings_seen, bad_hex = 0, 0, []
    for name, g in corpus.items():
        emb = Embedding(g)
        tube = name.startswith("r=")
        for ring in find_face_rings(g, emb):
            rings_seen += 1
            try:
                arm = check_ring_dichotomy(g, ring, emb)
            except DichotomyViolated:
                violations += 1
                continue
            if arm is Dichotomy.ALL_HEX_TEN_TEN:
                if not ring.inner_len == ring.outer_len == 10:
                    bad_hex.append(name)
                elif tube and not (ring_type(g, ring, "inner", emb) == "11111" == ring_type(g, ring, "outer", emb)):
                    bad_hex.append(name)
    record(4, "ring dichotomy", violations == 0 and not bad_hex,
           f"{rings_seen} rings, {violations} violations, bad hexagonal rings={bad_hex}")


def test_criterion_5_construction():
    bad = []
    for r in range(6):
        d = nanotube_decomposition(nanotube(r))
        path, hc = build_hamilton(d)
        if not verify_hamilton(d.graph, hc) or path.pentagon_count != (6 if r % 2 == 0 else 4):
            bad.append(r)
    record(5, "constructive Hamilton cycle r=0..5", not bad, f"failures={bad}")


def test_criterion_6_variant_bound():
    start = time.perf_counter()
    need = [10, 10, 20, 20, 40, 40]
    counts, outside = [], []
    for r in range(6):
        d = nanotube_decomposition(nanotube(r))
        variants = enumerate_hamilton_variants(d)
        counts.append(len(variants))
        if r <= 2:
            every = set(hamilton_cycles(d.graph))
            if not variants <= every:
                outside.append(r)
    g = dodecahedron()
    first = sum(1 for _ in hamilton_cycles(g))
    second = count_hamilton_by_edges(g)
    elapsed = time.perf_counter() - start
    ok = (all(c >= k for c, k in zip(counts, need)) and not outside
          and first == second == 30 and elapsed < 300)
    record(6, "Hamilton variant bound", ok,
           f"variants={counts} (need {need}), not in oracle={outside}, "
           f"dodecahedron totals {first}/{second} (expect 30), {elapsed:.1f}s (limit 300s)")


def test_criterion_7_matching_bound():
    start = time.perf_counter()
    rows = []
    for n, floor in [(20, 30), (30, 30), (40, 60)]:
        g = nanotube((n - 20) // 10)
        count = count_perfect_matchings(g)
        rows.append((n, count, count >= floor and count >= matching_lower_bound(n) and count >= prior_matching_bound(n)))
    dod = dodecahedron()
    a, b = count_perfect_matchings(dod), count_perfect_matchings_dp(dod)
    elapsed = time.perf_counter() - start
    ok = all(r[2] for r in rows) and a == b == 36 and elapsed < 120
    record(7, "perfect matching bound", ok,
           f"counts={[(n, c) for n, c, _ in rows]}, dodecahedron {a}/{b} (expect 36), {elapsed:.1f}s (limit 120s)")


def test_criterion_8_six_pentagons():
    seen = []
    for r in range(6):
        g = nanotube(r)
        emb = Embedding(g)
        seen += [six_pentagons_inside(g, cap.boundary, emb=emb) for cap in find_pentacaps(g, emb)]
    record(8, "six pentagons inside every pentacap boundary", set(seen) == {6},
           f"{len(seen)} boundaries, values={sorted(set(seen))}")


def test_criterion_9_round_trips():
    bad = []
    for r in range(1, 6):
        small = contract_ring(nanotube_decomposition(nanotube(r)))
        ref = nanotube(r - 1)
        redone = nanotube_decomposition(small.graph)
        if (small.n, face_vector(small.graph), redone.r) != (ref.n, face_vector(ref), r - 1):
            bad.append(f"contract r={r}")
    corpus = [nanotube(r) for r in range(6)] + [dodecahedron(), c60()]
    for i, g in enumerate(corpus):
        text = write_text_rotation(g)
        if read_text_rotation(text) != g or write_text_rotation(read_text_rotation(text)) != text:
            bad.append(f"text #{i}")
    stream = write_planar_code(corpus)
    if read_planar_code(stream) != corpus or write_planar_code(read_planar_code(stream)) != stream:
        bad.append("planar_code stream")
    raw = (DATA / "c60.pc").read_bytes()
    if write_planar_code(read_planar_code(raw)) != raw:
        bad.append("c60 fixture")
    record(9, "contraction and file round trips", not bad, f"failures={bad}")


if __name__ == "__main__":  # pragma: no cover
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
