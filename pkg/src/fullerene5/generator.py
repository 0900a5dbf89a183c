"""Parametric generator for the capped (5,0) nanotube family.

Vertex numbering for ``nanotube(r)`` (``n = 10 r + 20``):

* ``0..4``            central pentagon of the first cap, ``a_k = k``
* ``5 + 10 i + j``    vertex ``j`` of the 10-cycle ``C_i`` (``i = 0..r``)
* ``10 r + 15 + k``   central pentagon of the second cap

Spokes between ``C_i`` and ``C_{i+1}`` sit at positions ``j`` with
``j = i (mod 2)``; ``a_k`` hangs off ``C_0`` at ``j = 2k + 1`` and the second
cap's centre ``b_k`` off ``C_r`` at ``j = 2k + (r mod 2)``.  Rotations follow a
drawing with the cycles as concentric circles and ``j`` increasing
counterclockwise.
"""

from __future__ import annotations

from .graph import EmbeddedGraph


def cycle_vertex(i: int, j: int) -> int:
    return 5 + 10 * i + (j % 10)


def nanotube(r: int) -> EmbeddedGraph:
    """Two pentacaps joined by ``r`` rings of five hexagons; ``r = 0`` is the dodecahedron."""
    if r < 0:
        raise ValueError("r must be non-negative")
    n = 10 * r + 20
    b0 = 10 * r + 15
    q = r % 2
    rot: list = [None] * n

    for k in range(5):
        rot[k] = (cycle_vertex(0, 2 * k + 1), (k + 1) % 5, (k - 1) % 5)
        rot[b0 + k] = (b0 + (k + 1) % 5, cycle_vertex(r, 2 * k + q), b0 + (k - 1) % 5)

    for i in range(r + 1):
        for j in range(10):
            nxt, prv = cycle_vertex(i, j + 1), cycle_vertex(i, j - 1)
            if j % 2 == i % 2:
                out = cycle_vertex(i + 1, j) if i < r else b0 + (j - q) // 2
                rot[cycle_vertex(i, j)] = (out, nxt, prv)
            else:
                inward = cycle_vertex(i - 1, j) if i > 0 else (j - 1) // 2
                rot[cycle_vertex(i, j)] = (nxt, inward, prv)
    return EmbeddedGraph(tuple(rot))


def dodecahedron() -> EmbeddedGraph:
    return nanotube(0)


def cube() -> EmbeddedGraph:
    """The 3-cube Q3 embedded as two nested squares."""
    return EmbeddedGraph(
        (
            (1, 4, 3), (2, 5, 0), (3, 6, 1), (0, 7, 2),
            (0, 5, 7), (1, 6, 4), (2, 7, 5), (3, 4, 6),
        )
    )
