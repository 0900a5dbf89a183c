"""Regenerate c60.pc: icosahedral C60 as the truncated icosahedron.

    python tests/data/make_c60.py
"""

from pathlib import Path

import numpy as np

from fullerene5.formats import write_planar_code
from fullerene5.graph import EmbeddedGraph


def icosahedron_rotation():
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a in (-1, 1):
        for b in (-phi, phi):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    pts = np.array(pts, dtype=float)
    d = np.linalg.norm(pts[:, None] - pts[None], axis=-1)
    rot = []
    for v, p in enumerate(pts):
        nbrs = [w for w in range(12) if abs(d[v, w] - 2) < 1e-9]
        normal = p / np.linalg.norm(p)
        e1 = pts[nbrs[0]] - p
        e1 -= normal * (e1 @ normal)
        e2 = np.cross(normal, e1)
        ang = [np.arctan2((pts[w] - p) @ e2, (pts[w] - p) @ e1) for w in nbrs]
        rot.append([w for _, w in sorted(zip(ang, nbrs))])
    return rot


def truncate(rot):
    darts = {(v, w): i for i, (v, w) in enumerate((v, w) for v in range(len(rot)) for w in rot[v])}
    out = [None] * len(darts)
    for (v, w), i in darts.items():
        k = rot[v].index(w)
        succ, pred = rot[v][(k + 1) % len(rot[v])], rot[v][k - 1]
        out[i] = (darts[(w, v)], darts[(v, succ)], darts[(v, pred)])
    return EmbeddedGraph(tuple(out))


if __name__ == "__main__":
    g = truncate(icosahedron_rotation())
    Path(__file__).with_name("c60.pc").write_bytes(write_planar_code([g]))
