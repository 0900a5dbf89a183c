"""Command-line entry point.

    fullerene5 validate  (FILE | --nanotube R)
    fullerene5 analyze   (FILE | --nanotube R)
    fullerene5 hamilton  (FILE | --nanotube R)
    fullerene5 matchings (FILE | --nanotube R) [--max-oracle-n N]
    fullerene5 generate  --nanotube R [--format text|planar_code] [--out FILE]
    fullerene5 oracle    (FILE | --nanotube R) [--max-oracle-n N]

Reports are JSON on standard output unless ``--out`` is given.  Exit status
is 0 on success, 1 when the input fails validation or a check fails, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import List, Optional

from . import connectivity, formats, hamilton, matchings, rings
from .errors import FullereneError
from .generator import nanotube
from .graph import EmbeddedGraph, Embedding, validate_fullerene

HAMILTON_BUDGET = 40
MATCHING_BUDGET = 60


class UsageError(Exception):
    pass


def _load(args: argparse.Namespace) -> EmbeddedGraph:
    if args.nanotube is not None:
        if args.input:
            raise UsageError("give either an input file or --nanotube, not both")
        if args.nanotube < 0:
            raise UsageError("--nanotube must be non-negative")
        return nanotube(args.nanotube)
    if not args.input:
        raise UsageError("an input file or --nanotube is required")
    data = Path(args.input).read_bytes()
    fmt = args.format
    if fmt == "auto":
        fmt = "planar_code" if data.startswith(formats.PLANAR_CODE_HEADER) else "text"
    if fmt == "planar_code":
        graphs = formats.read_planar_code(data)
        if not 0 <= args.index < len(graphs):
            raise UsageError(f"record index {args.index} out of range ({len(graphs)} records)")
        return graphs[args.index]
    return formats.read_text_rotation(data)


def _emit(args: argparse.Namespace, payload) -> None:
    text = payload if isinstance(payload, (str, bytes)) else formats.write_report(payload)
    if args.out:
        Path(args.out).write_bytes(text if isinstance(text, bytes) else text.encode())
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
        sys.stdout.flush()
    else:
        sys.stdout.write(text)


def analysis(g: EmbeddedGraph) -> dict:
    """Validation, cutset census, rings, pentacaps and decomposition summary."""
    report = validate_fullerene(g)
    out = {"validation": report.as_dict()}
    if not report.is_fullerene:
        return out
    emb = Embedding(g)
    cuts = connectivity.find_cyclic_5_cutsets(g, emb)
    out["cyclic_5_cutsets"] = {
        "total": len(cuts),
        "trivial": sum(c.is_trivial for c in cuts),
        "nontrivial": sum(not c.is_trivial for c in cuts),
        "nontrivial_edges": [[list(e) for e in c.edges] for c in cuts if not c.is_trivial],
    }
    arms: Counter = Counter()
    types: Counter = Counter()
    for ring in rings.find_face_rings(g, emb):
        arm = rings.check_ring_dichotomy(g, ring, emb)
        arms[arm.value] += 1
        if arm is rings.Dichotomy.ALL_HEX_TEN_TEN:
            types[rings.ring_type(g, ring, "inner", emb).name] += 1
    out["rings"] = {"dichotomy": dict(sorted(arms.items())), "hexagonal_ring_types": dict(sorted(types.items()))}
    out["pentacaps"] = len(rings.find_pentacaps(g, emb))
    dec = rings.nanotube_decomposition(g, emb)
    out["decomposition"] = dec.summary() if dec is not None else None
    return out


def _hamilton_report(g: EmbeddedGraph) -> Optional[dict]:
    dec = rings.nanotube_decomposition(g)
    if dec is None:
        return None
    path, hc = hamilton.build_hamilton(dec)
    variants = hamilton.enumerate_hamilton_variants(dec)
    return {
        "n": g.n,
        "r": dec.r,
        "face_path": [list(dec.label_of_face[f]) for f in path.faces],
        "pentagon_count": path.pentagon_count,
        "cycle": list(hc.vertices),
        "cycle_length": len(hc),
        "verified": hamilton.verify_hamilton(g, hc),
        "variant_count": len(variants),
        "hamilton_bound": matchings.hamilton_lower_bound(dec.r),
    }


def _matchings_report(g: EmbeddedGraph, budget: int) -> dict:
    out = {
        "n": g.n,
        "matching_bound": matchings.matching_lower_bound(g.n) if g.n >= 20 and g.n % 10 == 0 else None,
        "prior_bound": matchings.prior_matching_bound(g.n),
        "exact": None,
    }
    if g.n <= budget:
        out["exact"] = matchings.count_perfect_matchings(g, max_n=budget)
    return out


def _oracle_report(g: EmbeddedGraph, budget: Optional[int]) -> dict:
    ham_budget = budget or HAMILTON_BUDGET
    pm_budget = budget or MATCHING_BUDGET
    checks = {}
    emb = Embedding(g)
    checks["validates"] = validate_fullerene(g).is_fullerene
    if g.n <= ham_budget:
        small = [k for k in range(1, 5) if next(connectivity.cyclic_cutsets_of_size(g, k), None) is not None]
        checks["no_cyclic_cutset_below_5"] = not small
        structural = {c.edges: c.classification for c in connectivity.find_cyclic_5_cutsets(g, emb)}
        exhaustive = {c.edges: c.classification for c in connectivity.find_cyclic_5_cutsets_exhaustive(g, ham_budget)}
        checks["cutsets_structural_equals_exhaustive"] = structural == exhaustive
    dec = rings.nanotube_decomposition(g, emb)
    checks["decomposition_iff_nontrivial_cutset"] = (dec is not None) == connectivity.has_nontrivial_cyclic_5_cutset(g, emb)
    if dec is not None:
        _, hc = hamilton.build_hamilton(dec)
        checks["construction_verified"] = hamilton.verify_hamilton(g, hc)
        variants = hamilton.enumerate_hamilton_variants(dec)
        checks["variants_meet_bound"] = len(variants) >= matchings.hamilton_lower_bound(dec.r)
        if g.n <= ham_budget:
            every = {h.edges for h in hamilton.hamilton_cycles(g, ham_budget)}
            checks["variants_within_oracle"] = {h.edges for h in variants} <= every
            checks["hamilton_counters_agree"] = len(every) == hamilton.count_hamilton_by_edges(g, ham_budget)
    if g.n <= pm_budget and g.n % 2 == 0:
        a = matchings.count_perfect_matchings(g, pm_budget)
        b = matchings.count_perfect_matchings_dp(g, pm_budget)
        checks["matching_counters_agree"] = a == b
        if g.n >= 20 and g.n % 10 == 0 and dec is not None:
            checks["matchings_meet_bound"] = a >= matchings.matching_lower_bound(g.n)
        checks["matchings_meet_prior_bound"] = a >= matchings.prior_matching_bound(g.n)
    return {"n": g.n, "checks": checks, "passed": all(checks.values())}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullerene5", description="Cyclic 5-edge-connectivity toolkit for fullerenes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="graph file (text rotation or planar_code)")
        p.add_argument("--nanotube", type=int, metavar="R", help="use the generated tube with R hexagonal rings")
        p.add_argument("--format", choices=["auto", "text", "planar_code"], default="auto")
        p.add_argument("--index", type=int, default=0, help="record to use from a planar_code stream")
        p.add_argument("--out", help="write the report here instead of standard output")

    for name, help_ in [
        ("validate", "check the fullerene axioms"),
        ("analyze", "cutsets, rings, pentacaps and nanotube decomposition"),
        ("hamilton", "constructive Hamilton cycle and variant count"),
    ]:
        graph_args(sub.add_parser(name, help=help_))
    for name, help_ in [("matchings", "exact perfect matching count versus bounds"), ("oracle", "brute-force cross-checks")]:
        p = sub.add_parser(name, help=help_)
        graph_args(p)
        p.add_argument("--max-oracle-n", type=int, default=None, help="largest n for exhaustive searches")

    p = sub.add_parser("generate", help="write a generated nanotube")
    p.add_argument("--nanotube", type=int, metavar="R", required=True)
    p.add_argument("--format", choices=["text", "planar_code"], default="text")
    p.add_argument("--out")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "max_oracle_n", None) is not None and args.max_oracle_n <= 0:
            raise UsageError("--max-oracle-n must be positive")
        if args.command == "generate":
            if args.nanotube < 0:
                raise UsageError("--nanotube must be non-negative")
            g = nanotube(args.nanotube)
            data = formats.write_text_rotation(g) if args.format == "text" else formats.write_planar_code([g])
            _emit(args, data)
            return 0
        g = _load(args)
    except (UsageError, OSError) as exc:
        print(f"fullerene5: error: {exc}", file=sys.stderr)
        return 2
    except FullereneError as exc:
        print(f"fullerene5: invalid input: {exc}", file=sys.stderr)
        return 1

    if args.command == "validate":
        report = validate_fullerene(g)
        _emit(args, report.as_dict())
        return 0 if report.is_fullerene else 1
    if not validate_fullerene(g).is_fullerene:
        _emit(args, {"validation": validate_fullerene(g).as_dict()})
        return 1
    if args.command == "analyze":
        _emit(args, analysis(g))
        return 0
    if args.command == "hamilton":
        rep = _hamilton_report(g)
        if rep is None:
            _emit(args, {"n": g.n, "nanotube": False})
            return 1
        _emit(args, rep)
        return 0
    if args.command == "matchings":
        _emit(args, _matchings_report(g, args.max_oracle_n or MATCHING_BUDGET))
        return 0
    rep = _oracle_report(g, args.max_oracle_n)
    _emit(args, rep)
    return 0 if rep["passed"] else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
