"""Graph file formats and report serialisation.

Text rotation format::

    # comment
    20
    0: 5 1 4
    1: 7 2 0
    ...

First non-comment line is ``n``; then one line per vertex listing its three
neighbours counterclockwise.

planar_code is the binary format of plantri/buckygen: the header
``>>planar_code<<`` followed by records of one byte ``n`` and, per vertex,
its 1-based neighbours in clockwise order closed by a zero byte.  Only the
single-byte variant (``n <= 255``) is supported.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, List

from .errors import BadHeader, ParseError, RotationInconsistent, TruncatedRecord
from .graph import EmbeddedGraph

PLANAR_CODE_HEADER = b">>planar_code<<"


def write_text_rotation(g: EmbeddedGraph) -> bytes:
    lines = [str(g.n)]
    lines += [f"{v}: {' '.join(map(str, nbrs))}" for v, nbrs in enumerate(g.rotation)]
    return ("\n".join(lines) + "\n").encode("ascii")


def read_text_rotation(data: bytes) -> EmbeddedGraph:
    n = None
    rot: dict = {}
    for lineno, raw in enumerate(data.decode("ascii", errors="replace").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(lineno, f"expected vertex count, got {line!r}") from None
            if n <= 0:
                raise ParseError(lineno, "vertex count must be positive")
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(lineno, "expected 'v: a b c'")
        try:
            v = int(head)
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError:
            raise ParseError(lineno, "non-integer token") from None
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex {v} out of range 0..{n - 1}")
        if v in rot:
            raise ParseError(lineno, f"vertex {v} listed twice")
        if len(nbrs) != 3:
            raise RotationInconsistent(f"line {lineno}: vertex {v} has degree {len(nbrs)}, expected 3")
        rot[v] = nbrs
    if n is None:
        raise ParseError(1, "empty file")
    missing = [v for v in range(n) if v not in rot]
    if missing:
        raise ParseError(lineno, f"missing rotation for vertices {missing[:10]}")
    return EmbeddedGraph(tuple(rot[v] for v in range(n)))


def write_planar_code(graphs: Iterable[EmbeddedGraph]) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        if g.n > 255:
            raise ValueError("single-byte planar_code supports n <= 255")
        out.append(g.n)
        for nbrs in g.rotation:
            out.extend(w + 1 for w in reversed(nbrs))
            out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> List[EmbeddedGraph]:
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("missing >>planar_code<< header")
    pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        rot = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord(f"record {len(graphs)} ends inside vertex {v}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise RotationInconsistent(f"record {len(graphs)}: neighbour {b} exceeds n={n}")
                nbrs.append(b - 1)
            rot.append(tuple(reversed(nbrs)))
        graphs.append(EmbeddedGraph(tuple(rot)))
    return graphs


def write_report(results: Any) -> str:
    """Deterministic JSON text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(results, indent=2, sort_keys=True) + "\n"
