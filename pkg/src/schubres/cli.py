"""Command-line entry point: ``schubres <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from . import fixtures as fx
from .diagram import cartan_determinant, classify, parse_diagram
from .grading import module_grading_range, z_grading_dims
from .orbit import (
    IncompleteOrbit,
    OrbitPoset,
    coordinate_degree,
    complement_filter,
    format_weight,
    fundamental_weight,
    levi_symmetry,
    orbit_poset,
    rank_sizes,
    sigma_chain,
)
from .report import REPORT_TYPES, build_report, render_json, render_text
from .resolution import (
    GradedFormat,
    betti_degree_solve,
    degree_of,
    gorenstein_sum,
    hilbert_numerator,
    k_polynomial,
    linkage_dual,
)
from .schur import verify_equivariant_format

log = logging.getLogger("schubres")

CACHE_ENV = "SCHUBRES_CACHE"
SIGMAS = ("sigma0", "sigma1", "sigma2", "sigma3", "sigma3p")


class UsageError(Exception):
    """Bad combination of arguments that argparse cannot catch."""


# -- helpers -----------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _format_arg(text: str) -> GradedFormat:
    try:
        return GradedFormat.from_json(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"format must be a JSON array of twist arrays: {exc}") from None
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _diagram_arg(text: str):
    try:
        return parse_diagram(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load_poset(d, max_length: int | None) -> OrbitPoset:
    """Build a poset, going through the JSON cache directory when one is configured."""
    if max_length is None and classify(d) != "finite":
        raise UsageError(f"{d} is {classify(d)}; --max-length is required")
    cache = os.environ.get(CACHE_ENV)
    path = None
    if cache:
        tag = "full" if max_length is None else f"L{max_length}"
        path = Path(cache) / f"poset_{d.p}_{d.q}_{d.r}_{tag}.json"
        if path.is_file():
            log.debug("reading cached poset %s", path)
            return OrbitPoset.from_json(json.loads(path.read_text()))
    P = orbit_poset(d, max_length)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(P.to_json()))
    return P


def _chain_element(d, name: str):
    chain = sigma_chain(d)
    return chain[SIGMAS.index(name)]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- commands ----------------------------------------------------------------


def cmd_classify(args) -> str:
    d = args.diagram
    kind = classify(d)
    det = cartan_determinant(d)
    if args.json:
        return _dump({"diagram": [d.p, d.q, d.r], "nodes": list(d.nodes), "type": kind, "cartan_determinant": det})
    return f"{d}: {kind} (det C = {det})\nnodes: {' '.join(d.nodes)}\n"


def cmd_orbit(args) -> str:
    P = load_poset(args.diagram, args.max_length)
    if args.json:
        return _dump(P.to_json())
    d = P.diagram
    lines = [f"{d}: {len(P)} elements, lengths 0..{P.length_bound}, complete={P.complete}"]
    for e in P:
        lines.append(f"{e.id:6d}  l={e.length:<3d} {format_weight(d, e.weight)}  {' '.join(e.reduced_word)}")
    return "\n".join(lines) + "\n"


def cmd_sigma(args) -> str:
    d = args.diagram
    chain = sigma_chain(d)
    if args.json:
        return _dump({"nodes": list(d.nodes), **{k: list(v) for k, v in chain._asdict().items()}})
    return "".join(f"{name:8s} {format_weight(d, w)}\n" for name, w in chain._asdict().items())


def cmd_generators(args) -> str:
    d = args.diagram
    P = load_poset(d, args.max_length)
    w = _chain_element(d, args.variety)
    L = args.length if args.length is not None else P.length_bound
    gens = complement_filter(P, w, L)
    rows = []
    for e in gens:
        deg = coordinate_degree(P, e) if P.complete else None
        rows.append({"weight": list(e.weight), "length": e.length, "degree": deg})
    if args.json:
        return _dump({"nodes": list(d.nodes), "variety": args.variety, "max_length": L, "generators": rows})
    lines = [f"{len(rows)} generators for {args.variety} on {d} (length <= {L})"]
    for r in rows:
        deg = "" if r["degree"] is None else f"  degree {r['degree']}"
        lines.append(f"  l={r['length']}  {format_weight(d, r['weight'])}{deg}")
    return "\n".join(lines) + "\n"


def cmd_levi(args) -> str:
    d = args.diagram
    P = load_poset(d, args.max_length if args.max_length is not None else (None if classify(d) == "finite" else 3))
    nodes, blocks = levi_symmetry(P, _chain_element(d, args.element))
    if args.json:
        return _dump({"element": args.element, "nodes": list(nodes), "blocks": list(blocks)})
    label = " x ".join(f"GL{b}" for b in blocks) or "torus"
    return f"{args.element}: {label}  (nodes {' '.join(nodes)})\n"


def cmd_ranks(args) -> str:
    P = load_poset(args.diagram, args.max_length)
    sizes = rank_sizes(P)
    if args.json:
        return _dump({"ranks": sizes, "complete": P.complete})
    return ",".join(map(str, sizes)) + "\n"


def cmd_grading(args) -> str:
    d = args.diagram
    if classify(d) != "finite":
        raise UsageError(f"{d} is {classify(d)}; gradings need a finite type")
    if args.module:
        r = module_grading_range(d, fundamental_weight(d, args.node), args.node)
        if args.json:
            return _dump({"module": f"V_{args.node}", "span": r.span, "dims": {str(k): v for k, v in r.dims.items()}})
        lines = [f"V_{args.node} graded by alpha_{args.node}: 0..{r.span}, dim {sum(r.dims.values())}"]
        lines += [f"  {k:3d}  {v}" for k, v in r.dims.items()]
        return "\n".join(lines) + "\n"
    g = z_grading_dims(d, args.node)
    if args.json:
        return _dump({"levi": g.levi, "total": g.total, "dims": {str(k): v for k, v in g.dims.items()}})
    lines = [f"g graded by alpha_{args.node}: dim {g.total}, grade 0 = {g.levi}"]
    lines += [f"  {k:3d}  {v}" for k, v in g.dims.items()]
    return "\n".join(lines) + "\n"


def cmd_rescalc(args) -> str:
    op = args.op
    if op == "numerator":
        h = hilbert_numerator(args.format, args.codim)
        return _dump({"k_polynomial": list(k_polynomial(args.format).coeffs), "numerator": list(h.coeffs)}) if args.json else f"{h}\n"
    if op == "degree":
        deg = degree_of(args.format, args.codim)
        return _dump({"degree": deg}) if args.json else f"{deg}\n"
    if op == "link":
        G = linkage_dual(args.format, args.ci)
        return G.to_json() + "\n" if args.json else f"{G}\n"
    if op == "gorenstein":
        G = gorenstein_sum(args.format, args.shift)
        return G.to_json() + "\n" if args.json else f"{G}\n"
    if op == "solve":
        sol = betti_degree_solve(args.gens, args.top, args.n)
        if args.json:
            return _dump({"degree_sum": sol.degree_sum, "square_sum": sol.square_sum, "tangent": sol.tangent,
                          "degrees": None if sol.degrees is None else list(sol.degrees)})
        return f"sum = {sol.degree_sum}, sum of squares = {sol.square_sum}: {sol.diagnostic}\n"
    raise UsageError(f"unknown rescalc operation {op!r}")


def cmd_schur(args) -> str:
    key = (args.type, args.variety)
    if key not in fx.EQUIVARIANT:
        raise UsageError(f"no equivariant display for {args.type} {args.variety}; available: "
                         + ", ".join(f"{t} {v}" for t, v in fx.EQUIVARIANT))
    rep = verify_equivariant_format(fx.EQUIVARIANT[key], fx.FORMATS[args.type][args.variety])
    if args.json:
        return _dump({
            "name": rep.name,
            "status": rep.status,
            "summands": [
                {"hdeg": s.homological_degree, "f": list(s.summand.f_shape), "g": list(s.summand.g_shape),
                 "twist": s.summand.twist, "dimension": s.dimension, "weight": s.weight,
                 "weight_ok": s.weight_ok, "corrected_twist": s.corrected_twist}
                for s in rep.summands
            ],
        })
    return "\n".join([f"{rep.name}: {rep.status}"] + rep.lines()) + "\n"


def cmd_invariant(args) -> str:
    from .quartic import (
        NVARS,
        SplitBasis,
        delta_polynomial,
        emit_cas_script,
        evaluate_delta,
        generator_set,
        parse_coefficients,
        VARIABLE_NAMES,
    )

    if args.emit and not args.generators:
        raise UsageError("--emit needs --generators sigma3|sigma3p")
    if args.eval:
        omega = parse_coefficients(json.loads(Path(args.eval).read_text()))
        value = evaluate_delta(omega)
        return _dump({"delta": value}) if args.json else f"{value}\n"
    D = delta_polynomial()
    if args.generators:
        split = SplitBasis.standard(4 if args.generators == "sigma3" else 2)
        gens = generator_set(split, args.generators)
        if args.emit:
            title = f"E6 {args.generators} restricted to Lambda^3 k^6, F = {list(split.f_part)}"
            return emit_cas_script(gens, args.emit, title)
        if args.json:
            return _dump({"degrees": [g.total_degree for g in gens],
                          "generators": [g.to_string(VARIABLE_NAMES) for g in gens]})
        return "".join(f"[{g.total_degree}] {g.to_string(VARIABLE_NAMES)}\n" for g in gens)
    if args.json:
        return _dump({"degree": D.total_degree, "nvars": NVARS, "terms": len(D),
                      "polynomial": D.to_string(VARIABLE_NAMES)})
    return f"degree {D.total_degree} in {NVARS} variables, {len(D)} terms\n{D.to_string(VARIABLE_NAMES)}\n"


def cmd_report(args) -> str:
    entries = build_report(args.type)
    return render_json(args.type, entries) if args.json else render_text(args.type, entries)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    diag = argparse.ArgumentParser(add_help=False)
    diag.add_argument("--diagram", type=_diagram_arg, default="e6", help="'p,q,r' or a preset (default e6)")
    diag.add_argument("--max-length", type=int, default=None, help="truncate the orbit at this length")

    parser = argparse.ArgumentParser(prog="schubres", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, diag], help="finite / affine / indefinite")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("orbit", parents=[common, diag], help="the coset poset W/W_P")
    p.set_defaults(func=cmd_orbit)
    p = sub.add_parser("sigma", parents=[common, diag], help="the elements of length 0..3")
    p.set_defaults(func=cmd_sigma)
    p = sub.add_parser("generators", parents=[common, diag], help="Pluecker coordinates cutting out a variety")
    p.add_argument("--variety", choices=("sigma3", "sigma3p"), default="sigma3")
    p.add_argument("--length", type=int, default=None, help="only coordinates of length <= this")
    p.set_defaults(func=cmd_generators)
    p = sub.add_parser("levi", parents=[common, diag], help="Levi subgroup preserving a variety")
    p.add_argument("--element", choices=SIGMAS, default="sigma3")
    p.set_defaults(func=cmd_levi)
    p = sub.add_parser("ranks", parents=[common, diag], help="number of cosets of each length")
    p.set_defaults(func=cmd_ranks)
    p = sub.add_parser("grading", parents=[common, diag], help="Z-grading of g or of V_node")
    p.add_argument("--node", default="x1")
    p.add_argument("--module", action="store_true", help="grade the fundamental module instead of g")
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("rescalc", help="arithmetic on graded resolution formats")
    ops = p.add_subparsers(dest="op", required=True)
    for name, helptext in (("numerator", "Hilbert series numerator"), ("degree", "degree of the module")):
        q = ops.add_parser(name, parents=[common], help=helptext)
        q.add_argument("format", type=_format_arg, help="JSON, e.g. [[0],[3,3,3,3,4],[5,5,5,5,5,5],[7,7]]")
        q.add_argument("--codim", type=int, default=None, help="default: length of the format")
    q = ops.add_parser("link", parents=[common], help="linked format via a complete intersection")
    q.add_argument("format", type=_format_arg)
    q.add_argument("--ci", type=_int_list, required=True, help="e.g. 4,3,3")
    q = ops.add_parser("gorenstein", parents=[common], help="format of the sum of linked ideals")
    q.add_argument("format", type=_format_arg)
    q.add_argument("--shift", type=int, required=True)
    q = ops.add_parser("solve", parents=[common], help="second syzygy degrees from the first and last")
    q.add_argument("--gens", type=_int_list, required=True)
    q.add_argument("--top", type=_int_list, required=True)
    q.add_argument("--n", type=int, required=True, help="rank of the middle module")
    p.set_defaults(func=cmd_rescalc)

    p = sub.add_parser("schur", help="check equivariant resolution displays")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("check", parents=[common])
    q.add_argument("--type", choices=("e7", "e8"), required=True)
    q.add_argument("--variety", choices=("sigma3", "sigma3p"), required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("invariant", parents=[common], help="the quartic invariant of a 3-form in 6 variables")
    p.add_argument("--eval", metavar="FILE", help='JSON map such as {"1,2,3": 1, "4,5,6": 1}')
    p.add_argument("--generators", choices=("sigma3", "sigma3p"))
    p.add_argument("--emit", choices=("m2", "macaulay2", "singular"))
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("report", parents=[common], help="replay every published value")
    p.add_argument("--type", choices=REPORT_TYPES, required=True)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if isinstance(getattr(args, "diagram", None), str):
        args.diagram = parse_diagram(args.diagram)
    if getattr(args, "codim", "unset") is None:
        args.codim = args.format.length
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"schubres: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, KeyError, IncompleteOrbit, OSError) as exc:
        print(f"schubres: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
