"""Command-line front end.

Every subcommand reads one EGR document from a file argument or standard
input.  Exit status: 0 success, 1 violation or no solution, 2 usage or parse
error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import coloring as col
from .corpus import CorpusError
from .hyperbolic import (PreconditionError, check_cheeger, check_discharging, check_strong_hyperbolic,
                         classify_structure, derive_constants)
from .sleeve import sleeve_decompose, validate_decomposition
from .suites import SUITES, CorpusSpec, UsageError, generate_corpus, verify_suite
from .surface_core import EGRError, cut_cycle, excise_cylinder, parse_egr, serialize_egr
from .topology import (build_frame, edge_width, enumerate_disk_curves, optimize_frame,
                       segment_report)

OK, FAIL, USAGE, RESOURCE = 0, 1, 2, 3


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_graph(path):
    if path in (None, "-"):
        data = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            data = fh.read()
    return parse_egr(data)


def _read_precolor(path) -> dict[int, int]:
    pre = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] != "C":
                raise UsageError(f"precolor line {n}: expected 'C <vertex> <color>'")
            pre[int(parts[1])] = int(parts[2])
    return pre


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _verdict(v) -> int:
    _out(v.describe())
    return OK if v.ok else FAIL


# subcommands


def cmd_info(a):
    G = _read_graph(a.file)
    _out(f"vertices {G.vertex_count}\nedges {len(G.edges)}\nfaces {len(G.faces)}\n{G.summary()}")
    for i, r in enumerate(G.rings):
        _out(f"ring {i} face {r.face_id}: " + ",".join(map(str, r.vertex_walk)))
    _out(f"lists {'yes' if G.lists is not None else 'no'}")
    return OK


def cmd_genus(a):
    _out(str(_read_graph(a.file).summary()))
    return OK


def cmd_faces(a):
    G = _read_graph(a.file)
    for i, f in enumerate(G.faces):
        _out(f"F {i} {f.length}: " + " ".join(map(str, f.vertices)))
    return OK


def cmd_edgewidth(a):
    w = edge_width(_read_graph(a.file))
    _out("inf" if w == float("inf") else str(int(w)))
    return OK


def cmd_frame(a):
    G = _read_graph(a.file)
    F = build_frame(G)
    if a.optimize:
        F = optimize_frame(G, F)
    rep = segment_report(G, F)
    _out(F.serialize())
    _out(f"segments {len(rep.segments)} non-ring {rep.nonring_count} bound "
         f"{'-' if rep.bound is None else rep.bound}")
    return OK if rep.within_bound else FAIL


def cmd_curves(a):
    G = _read_graph(a.file)
    for curve, inside in enumerate_disk_curves(G, a.max_len):
        _out(curve.serialize() + " | inside " + (",".join(map(str, sorted(inside))) or "-"))
    return OK


def cmd_cut(a):
    _out(serialize_egr(cut_cycle(_read_graph(a.file), a.cycle)))
    return OK


def cmd_excise(a):
    _out(serialize_egr(excise_cylinder(_read_graph(a.file), a.c1, a.c2)))
    return OK


def cmd_color(a):
    G = _read_graph(a.file)
    pre = _read_precolor(a.precolor) if a.precolor else None
    phi = col.solve(G, None, pre)
    if phi is None:
        _out("NONE")
        return FAIL
    _out("\n".join(f"C {v} {c}" for v, c in sorted(phi.items())))
    return OK


def cmd_count(a):
    G = _read_graph(a.file)
    pre = _read_precolor(a.precolor) if a.precolor else None
    n = col.count_extensions(G, None, pre)
    _out(str(n))
    return OK if n else FAIL


def cmd_critical(a):
    crit = col.is_critical(_read_graph(a.file))
    _out("critical" if crit else "not critical")
    return OK if crit else FAIL


def cmd_kernel(a):
    G = _read_graph(a.file)
    H, _ = col.kernel_graph(G, col.extract_kernel(G))
    _out(serialize_egr(H))
    return OK


def cmd_expcritical(a):
    crit = col.is_exp_critical(_read_graph(a.file), a.eps, a.alpha)
    _out("exp-critical" if crit else "not exp-critical")
    return OK if crit else FAIL


def cmd_cheeger(a):
    return _verdict(check_cheeger(_read_graph(a.file), a.c, a.max_len))


def cmd_strong(a):
    return _verdict(check_strong_hyperbolic(_read_graph(a.file), a.c, a.c2, a.max_cycle_len))


def cmd_discharge(a):
    return _verdict(check_discharging(_read_graph(a.file), a.kind))


def cmd_constants(a):
    K = derive_constants(a.c, a.c2, a.gamma, a.kappa, a.g, a.M)
    for name, value in K.items():
        _out(f"{name} = {value}")
    return OK


def cmd_classify(a):
    G = _read_graph(a.file)
    rep = classify_structure(G, derive_constants(a.c, a.c2), a.variant)
    _out("\n".join(rep.lines()))
    return OK if rep.assignable else FAIL


def cmd_sleeves(a):
    G = _read_graph(a.file)
    D = sleeve_decompose(G, a.c, a.cheeger_len)
    _out(D.serialize().rstrip("\n"))
    for line in D.violations:
        _out("# " + line)
    v = validate_decomposition(D, G)
    _out("# " + v.describe())
    return OK if v.ok and not D.violations else FAIL


def _spec(a) -> dict:
    kw = {}
    for name in ("kind", "n_min", "n_max", "ring_min", "ring_max", "lists", "assignments", "seed",
                 "min_interior_degree", "ceiling", "exhaustive_max", "samples"):
        val = getattr(a, name, None)
        if val is not None:
            kw[name] = val
    if getattr(a, "cmax", None) is not None:
        kw["ring_max"] = a.cmax
    return kw


def cmd_generate(a):
    spec = CorpusSpec(**_spec(a))
    for i, G in enumerate(generate_corpus(spec)):
        _out(f"# canvas {i}")
        _out(serialize_egr(G).rstrip("\n"))
    return OK


def cmd_verify(a):
    rep = verify_suite(a.suite, **_spec(a))
    _out(rep.text().rstrip("\n"))
    sys.stderr.write(f"wall-time {rep.wall_time:.2f}s\n")
    return rep.exit_code


def _spec_flags(p):
    p.add_argument("--kind", choices=("plane", "cylinder", "torus", "crossing"))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--ring-min", type=int)
    p.add_argument("--ring-max", type=int)
    p.add_argument("--cmax", type=int, help="largest ring length (same as --ring-max)")
    p.add_argument("--lists", choices=("none", "all-5", "type345", "random5"))
    p.add_argument("--assignments", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--min-interior-degree", type=int)
    p.add_argument("--ceiling", type=int)
    p.add_argument("--exhaustive-max", type=int, help="largest exhaustively enumerated plane size")
    p.add_argument("--samples", type=int, help="random plane maps per size above --exhaustive-max")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="surfcolor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("file", nargs="?", help="EGR file (default: standard input)")
        p.set_defaults(fn=fn)
        return p

    add("info", cmd_info, "vertex, edge, face and ring summary")
    add("genus", cmd_genus, "Euler genus, components and rings")
    add("faces", cmd_faces, "traced face walks")
    add("edgewidth", cmd_edgewidth, "edge-width")
    add("frame", cmd_frame, "a frame and its segment count").add_argument("--optimize", action="store_true")
    add("curves", cmd_curves, "disk-bounding curves").add_argument("--max-len", type=int, required=True)
    add("cut", cmd_cut, "cut along a cycle").add_argument("--cycle", type=_int_list, required=True)
    p = add("excise", cmd_excise, "the cylinder between two cycles")
    p.add_argument("--c1", type=_int_list, required=True)
    p.add_argument("--c2", type=_int_list, required=True)
    add("color", cmd_color, "an L-colouring or NONE").add_argument("--precolor")
    add("count", cmd_count, "number of L-colourings").add_argument("--precolor")
    add("critical", cmd_critical, "criticality with respect to the rings")
    add("kernel", cmd_kernel, "a kernel subgraph containing the rings")
    p = add("expcritical", cmd_expcritical, "exponential criticality")
    p.add_argument("--eps", type=_rational, required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p = add("cheeger", cmd_cheeger, "Cheeger check over short disk curves")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p = add("strong", cmd_strong, "strong hyperbolicity check")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--c2", type=_rational, required=True)
    p.add_argument("--max-cycle-len", type=int)
    add("discharge", cmd_discharge, "discharging lemma check").add_argument(
        "--kind", choices=("deg7", "deg6", "ring44"), required=True)
    p = add("constants", cmd_constants, "derived constants", graph=False)
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--c2", type=_rational)
    p.add_argument("--gamma", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--M", type=int)
    p = add("classify", cmd_classify, "structural outcome of a kernel")
    p.add_argument("--c", type=_rational, default=Fraction(18))
    p.add_argument("--c2", type=_rational, default=Fraction(0))
    p.add_argument("--variant", choices=("free5", "free6"), default="free5")
    p = add("sleeves", cmd_sleeves, "sleeve decomposition archive")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--cheeger-len", type=int, help="run the Cheeger check first, up to this curve length")
    _spec_flags(add("generate", cmd_generate, "print a corpus as EGR blocks", graph=False))
    p = add("verify", cmd_verify, "run a verification suite", graph=False)
    p.add_argument("suite", help="one of: " + ", ".join(sorted(SUITES)))
    _spec_flags(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except (col.ResourceError, CorpusError) as exc:
        sys.stderr.write(f"resource budget exceeded: {exc}\n")
        return RESOURCE
    except (EGRError, UsageError, col.ColoringError, PreconditionError, ValueError,
            OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
