"""Command-line front end: ``sixspheres <subcommand> [options]``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter, defaultdict
from typing import Callable, Dict, List, Optional, Sequence

from . import circuits as cc
from . import eisenstein as eis
from . import io as sio
from . import named_graphs as ng
from .enumerator import (EnumerationRequest, brute_force_oracle, census_maps,
                         count_table, enumerate as enumerate_records)
from .goldberg_coxeter import BadParameter as GCBadParameter, gc, oriented_triplings
from .map_core import MapError, PlanarMap, canonical_code
from .published import PUBLISHED_COUNTS
from .records import GraphRecord, analyze
from .symmetry import point_group

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


# -- helpers ----------------------------------------------------------------------

def _load_maps(args) -> List[PlanarMap]:
    if getattr(args, "input", None):
        with open(args.input) as fh:
            maps = list(sio.read_dartlist(fh))
        if not maps:
            raise UsageError(f"no maps in {args.input}")
        return maps
    if getattr(args, "seed", None):
        try:
            return [ng.named_graph(args.seed)]
        except ng.BadParameter as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError("give --seed NAME or --input FILE")


def _emit(records: Sequence[GraphRecord], maps: Sequence[PlanarMap], args) -> None:
    fmt = getattr(args, "format", None) or "jsonl"
    out = getattr(args, "out", None)
    if fmt == "jsonl":
        if out:
            store = sio.Store(out)
            store.add(records)
        else:
            for r in records:
                print(r.to_json())
    elif fmt == "dartlist":
        text = "\n".join(sio.to_dartlist(m) for m in maps) + "\n"
        if out:
            with open(out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    elif fmt == "planarcode":
        if not out:
            raise UsageError("--format planarcode needs --out")
        try:
            with open(out, "wb") as fh:
                sio.write_planar_code(maps, fh)
        except sio.FormatError as exc:
            raise UsageError(str(exc)) from exc


def _summary(r: GraphRecord) -> str:
    p = ",".join(f"p{k}={v}" for k, v in sorted(r.p_vector.items()))
    return (f"n={r.n} {p} group={r.group} z=[{r.z_vector}] ({r.tight_z}) "
            f"c=[{r.c_vector}] ({r.tight_c}) {r.provenance}")


def _maybe_render(m: PlanarMap, path: Optional[str], title: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(sio.render_svg(m, title))


# -- subcommands ---------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    req = EnumerationRequest(max_n=args.max_n, p1_filter=args.p1,
                             dedup_mirror=(args.mirror == "quotient"),
                             min_n=args.min_n, threads=args.threads)
    records: List[GraphRecord] = []
    maps: List[PlanarMap] = []
    counts: Dict[int, Counter] = defaultdict(Counter)
    store = sio.Store(args.out) if (args.out and args.format == "jsonl") else None
    for n in range(req.min_n, req.max_n + 1):
        cells = census_maps(n, req.p1_values(), req.dedup_mirror, req.threads)
        for p1 in req.p1_values():
            counts[n][p1] = len(cells[p1])
            if store is not None and store.has_cell(n, p1):
                continue
            cell_records = [analyze(m, provenance=f"census n={n} p1={p1}", code=code)
                            for code, m in cells[p1].items()]
            if store is not None:
                store.add(cell_records)
                store.mark_cell(n, p1)
            else:
                records += cell_records
                maps += list(cells[p1].values())
        if store is not None:
            store.add([])
    if store is None and args.out:
        _emit(records, maps, args)
    header = "n  " + " ".join(f"N{p}".rjust(5) for p in req.p1_values())
    print(header)
    for n in sorted(counts):
        print(f"{n:<3}" + " ".join(str(counts[n][p]).rjust(5) for p in req.p1_values()))
    return EXIT_OK


def cmd_named(args) -> int:
    if args.list or not args.name:
        for name in ng.names():
            print(name)
        return EXIT_OK
    try:
        m = ng.named_graph(args.name)
    except ng.BadParameter as exc:
        raise UsageError(str(exc)) from exc
    r = analyze(m, provenance=f"named {args.name}")
    print(_summary(r))
    if args.out:
        _emit([r], [m], args)
    return EXIT_OK


def cmd_gc(args) -> int:
    if args.k is None or args.l is None:
        raise UsageError("gc needs --k and --l")
    maps = _load_maps(args)
    out_r, out_m = [], []
    for m in maps:
        try:
            res = gc(m, args.k, args.l)
        except GCBadParameter as exc:
            raise UsageError(str(exc)) from exc
        for i, g in enumerate(res.members):
            r = analyze(g, provenance=f"gc({args.seed or 'input'},{args.k},{args.l})#{i}")
            print(_summary(r))
            out_r.append(r)
            out_m.append(g)
    _maybe_render(out_m[0], args.render, f"GC({args.k},{args.l})")
    if args.out:
        _emit(out_r, out_m, args)
    return EXIT_OK


def cmd_tripling(args) -> int:
    out_r, out_m = [], []
    for m in _load_maps(args):
        for cls, t in enumerate(oriented_triplings(m)):
            r = analyze(t, provenance=f"tripling class {cls}")
            print(_summary(r))
            out_r.append(r)
            out_m.append(t)
    if args.out:
        _emit(out_r, out_m, args)
    return EXIT_OK


def cmd_circuits(args) -> int:
    for m in _load_maps(args):
        for kind, cs in (("z", cc.zigzags(m)), ("c", cc.central_circuits(m))):
            print(f"{kind}-vector: {cs.render()}")
            if args.matrix:
                for row in cs.matrix:
                    print("   " + " ".join(f"{a}/{b}" for a, b in row))
    return EXIT_OK


def cmd_symmetry(args) -> int:
    for m in _load_maps(args):
        g = point_group(m)
        print(f"{g.name} order={g.order} rotations={g.rotation_order}")
    return EXIT_OK


def cmd_tight(args) -> int:
    for m in _load_maps(args):
        for kind in (cc.ZIGZAG, cc.CENTRAL):
            rep = cc.tightness(m, kind)
            print(f"{kind}: {rep.status} circuits={rep.n_circuits} s={rep.s_value} "
                  f"railroads={[(x.circuit, x.partner) for x in rep.railroads]}")
    return EXIT_OK


def cmd_render(args) -> int:
    if not args.out:
        raise UsageError("render needs --out FILE.svg")
    m = _load_maps(args)[0]
    with open(args.out, "w") as fh:
        fh.write(sio.render_svg(m, args.seed or "", seed=args.rng_seed))
    return EXIT_OK


# -- verify -----------------------------------------------------------------------------

def _corpus(max_n: int) -> List[GraphRecord]:
    return list(enumerate_records(EnumerationRequest(max_n=max_n)))


def _suite_oracle(max_n: int, log) -> bool:
    ok = True
    for n in range(1, min(max_n, 10) + 1):
        cells = census_maps(n)
        for p1 in range(4):
            same = set(cells[p1]) == set(brute_force_oracle(n, p1))
            ok &= same
            if not same:
                log(f"oracle mismatch at n={n} p1={p1}")
    return ok


def _suite_sums(max_n: int, log) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        for p1, cell in census_maps(n).items():
            for m in cell.values():
                z = sum(cc.zigzags(m).lengths())
                c = sum(cc.central_circuits(m).lengths())
                if z != 6 * n or c != 3 * n:
                    ok = False
                    log(f"sum rule violated at n={n} p1={p1}: z={z} c={c}")
    return ok


def _suite_type2(max_n: int, log) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        for cell in census_maps(n).values():
            for m in cell.values():
                for cs in (cc.zigzags(m), cc.central_circuits(m)):
                    if any(a for row in cs.matrix for a, _ in row):
                        ok = False
                        log(f"type-I intersection under canonical orientation at n={n}")
    return ok


def _suite_bounds(max_n: int, log) -> bool:
    rep = cc.classify_corpus(_corpus(max_n))
    ok = True
    for (p1, kind, status), v in sorted(rep.maxima.items()):
        if status == "tight" and v > cc.TIGHT_BOUNDS[p1]:
            ok = False
        if status == "weakly_tight" and v > cc.WEAK_BOUNDS_REFINED[p1]:
            ok = False
            log(f"weakly tight bound exceeded: p1={p1} {kind} {v}")
    for msg in rep.violations:
        log(msg)
    return ok and not rep.violations


def _suite_gc(max_n: int, log) -> bool:
    ok = True
    for name in ("6xK2", "Trifolium", "K2xTetrahedron"):
        m = ng.named_graph(name)
        base = canonical_code(m, False)
        if gc(m, 1, 0).codes() != {base}:
            ok = False
            log(f"gc(1,0) is not the identity on {name}")
        for norm in range(1, 8):
            for k, l in eis.representations(norm):
                for g in gc(m, k, l).members:
                    if g.n_vertices != m.n_vertices * norm:
                        ok = False
                        log(f"vertex count law fails for {name} ({k},{l})")
    return ok


def _gc_theorem_report(log) -> bool:
    log("vector theorem for GC_{1+4u,0}: stated parameter vs sum-consistent parameter")
    for name in ("6xK2", "3xK3", "Trifolium", "K2xTetrahedron"):
        for r in cc.gc_vector_theorem_report(ng.named_graph(name), (1,)):
            log(f"  {name} u={r.u} GC{r.parameter}: n={r.actual_vertices} "
                f"(sums predict n={r.predicted_vertices}) match={r.matches}")
    log("  discrepancy: the stated vectors sum to a graph with n(1+3u)^2 vertices; "
        "they coincide with GC_{1+3u,0}, not GC_{1+4u,0}")
    return True


def _suite_table(max_n: int, log) -> bool:
    ok = True
    table = count_table(EnumerationRequest(max_n=max_n))
    for n, got in table.items():
        want = PUBLISHED_COUNTS.get(n)
        if want is not None and tuple(got) != tuple(want):
            ok = False
            log(f"n={n}: enumerated {got} vs published {want}")
    return ok


SUITES: Dict[str, Callable] = {
    "oracle": _suite_oracle, "sums": _suite_sums, "type2": _suite_type2,
    "bounds": _suite_bounds, "gc": _suite_gc, "table": _suite_table,
}
ALL_SUITES = ("oracle", "sums", "type2", "bounds", "gc")


def cmd_verify(args) -> int:
    names = ALL_SUITES if args.suite == "all" else (args.suite,)
    if args.suite == "gc-theorem":
        _gc_theorem_report(print)
        return EXIT_OK
    failed = []
    for name in names:
        ok = SUITES[name](args.max_n, lambda s: print("   " + s))
        print(f"{name}: {'ok' if ok else 'FAILED'}")
        if not ok:
            failed.append(name)
    if args.suite == "all":
        _gc_theorem_report(print)
    return EXIT_VERIFY if failed else EXIT_OK


# -- conjecture scan -------------------------------------------------------------------------

def conjectured_f(p1: int, v: int) -> Optional[int]:
    """Conjectured maximal number of central circuits (None when not stated)."""
    if p1 == 2:
        return v + 1
    if p1 == 1:
        if v % 2:
            if v < 3:
                return None
            return (v - 1) // 2 + (1 if v % 4 == 3 else 2)
        return (v - 1) // 3 + 2 if v >= 4 else None
    if p1 == 0:
        if v % 2 == 0:
            if v < 6:
                return None
            return v // 2 + (1 if v % 4 == 0 else 2)
        return v // 3 + (3 if v % 9 in (2, 4, 6) else 1)
    return None


def conjecture_scan(records: Sequence[GraphRecord]) -> Dict[str, object]:
    knotted = Counter(r.group for r in records
                      if (r.n_zigzags == 1 or r.n_central == 1) and not (r.p1 == 3 and r.n == 1))
    simple_c = Counter(r.group for r in records if r.p1 == 0 and r.simple_c)
    high = [(r.n, r.group, r.simple_z and r.simple_c) for r in records
            if r.group in ("D6h", "Th", "Td")]
    td_th = [(r.n, r.group, r.z_vector, r.c_vector) for r in records if r.p1 == 0 and r.group in ("Td", "Th")]
    fmax: Dict[tuple, int] = {}
    for r in records:
        key = (r.p1, r.n)
        fmax[key] = max(fmax.get(key, 0), r.n_central)
    f_rows = [(p1, n, v, conjectured_f(p1, n)) for (p1, n), v in sorted(fmax.items()) if p1 < 3]
    return {"knotted_groups": dict(knotted), "simple_c_groups": dict(simple_c),
            "high_symmetry_simple": high, "td_th_vectors": td_th, "f_max": f_rows}


def cmd_conjecture_scan(args) -> int:
    rep = conjecture_scan(_corpus(args.max_n))
    print("knotted spheres by group (Trifolium excluded):", rep["knotted_groups"])
    print("({2,3},6)-spheres with only simple central circuits by group:", rep["simple_c_groups"])
    print("D6h/Th/Td spheres (n, group, all circuits simple):", rep["high_symmetry_simple"])
    print("Td/Th vectors:", rep["td_th_vectors"])
    print("max central circuits  p1 n observed conjectured")
    for p1, n, v, f in rep["f_max"]:
        flag = "" if f is None or f == v else "  <- differs"
        print(f"   {p1} {n:>3} {v:>3} {'-' if f is None else f:>3}{flag}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; usage errors are 1
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sixspheres", description="({1,2,3},6)-spheres toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, out=True):
        sp.add_argument("--seed", help="named graph, e.g. 6xK2, Trifolium, K2xTetrahedron, A(5)")
        sp.add_argument("--input", help="dart-list file")
        if out:
            sp.add_argument("--out")
            sp.add_argument("--format", choices=("dartlist", "planarcode", "jsonl"), default="jsonl")

    e = sub.add_parser("enumerate")
    e.add_argument("--max-n", type=int, required=True)
    e.add_argument("--min-n", type=int, default=1)
    e.add_argument("--p1", type=int, choices=(0, 1, 2, 3))
    e.add_argument("--out")
    e.add_argument("--format", choices=("dartlist", "planarcode", "jsonl"), default="jsonl")
    e.add_argument("--threads", type=int, default=1)
    e.add_argument("--mirror", choices=("quotient", "chiral"), default="quotient")

    n = sub.add_parser("named")
    n.add_argument("name", nargs="?")
    n.add_argument("--list", action="store_true")
    n.add_argument("--out")
    n.add_argument("--format", choices=("dartlist", "planarcode", "jsonl"), default="jsonl")

    g = sub.add_parser("gc")
    common(g)
    g.add_argument("--k", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--render")

    t = sub.add_parser("tripling")
    common(t)

    c = sub.add_parser("circuits")
    common(c, out=False)
    c.add_argument("--matrix", action="store_true")

    s = sub.add_parser("symmetry")
    common(s, out=False)

    ti = sub.add_parser("tight")
    common(ti, out=False)

    r = sub.add_parser("render")
    common(r, out=False)
    r.add_argument("--out")
    r.add_argument("--rng-seed", type=int, default=0)

    v = sub.add_parser("verify")
    v.add_argument("--suite", default="all", choices=("all", "gc-theorem", *SUITES))
    v.add_argument("--max-n", type=int, default=8)

    cs = sub.add_parser("conjecture-scan")
    cs.add_argument("--max-n", type=int, default=10)
    return p


COMMANDS = {
    "enumerate": cmd_enumerate, "named": cmd_named, "gc": cmd_gc, "tripling": cmd_tripling,
    "circuits": cmd_circuits, "symmetry": cmd_symmetry, "tight": cmd_tight,
    "render": cmd_render, "verify": cmd_verify, "conjecture-scan": cmd_conjecture_scan,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("missing subcommand")
        if getattr(args, "max_n", 1) is not None and getattr(args, "max_n", 1) < 1:
            raise UsageError("--max-n must be positive")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MapError, sio.FormatError, ng.BadParameter, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
