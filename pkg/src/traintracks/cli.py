"""Command-line entry point.

Subcommands: recognize, draw, gen, maxsub, check, tree.

Exit codes: 0 ok, 1 I/O or parse error, 2 not distance-hereditary,
3 internal pipeline assertion, 4 brute-force guard exceeded,
5 validation failure.
"""

from __future__ import annotations

import argparse
import sys

from . import graph as graphmod
from . import hexgrid, ortho, radial, recognize, render, tree as treemod

EXIT_OK = 0
EXIT_IO = 1
EXIT_NOT_DH = 2
EXIT_INTERNAL = 3
EXIT_GUARD = 4
EXIT_INVALID = 5


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_output(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path):
    g = graphmod.parse_graph(_read_input(path))
    if g.n == 0:
        raise graphmod.GraphParseError("empty graph")
    return g


def _recognized(path):
    g = _load_graph(path)
    return g, recognize.eliminate(g)


def cmd_recognize(args):
    try:
        _, seq = _recognized(args.input)
    except (recognize.NotDistanceHereditary, recognize.Disconnected) as exc:
        print(f"not distance-hereditary: {exc}", file=sys.stderr)
        return EXIT_NOT_DH
    sys.stdout.write(recognize.sequence_to_text(seq))
    return EXIT_OK


def cmd_tree(args):
    try:
        g, seq = _recognized(args.input)
    except (recognize.NotDistanceHereditary, recognize.Disconnected) as exc:
        print(f"not distance-hereditary: {exc}", file=sys.stderr)
        return EXIT_NOT_DH
    t = treemod.build_delta_tree(g, seq)
    sys.stdout.write(treemod.tree_to_text(t))
    return EXIT_OK


def cmd_draw(args):
    try:
        g, seq = _recognized(args.input)
    except (recognize.NotDistanceHereditary, recognize.Disconnected) as exc:
        print(f"not distance-hereditary: {exc}", file=sys.stderr)
        return EXIT_NOT_DH
    t = treemod.build_delta_tree(g, seq)
    opts = render.RenderOptions(
        cell_size=args.cell_size,
        junction_radius=args.junction_radius,
        show_labels=args.labels,
    )
    try:
        if args.layout == "radial":
            layout = radial.layout_radial_trident(t, ratio=args.ratio)
            svg = render.render_svg(t, layout, opts)
            metrics = f"nodes={len(layout.positions)}"
        else:
            rbt = ortho.root_at_leaf(t)
            ortho_layout = ortho.layout_upward_ortho(rbt)
            bad = ortho.check_ortho_valid(ortho_layout)
            if bad:
                raise AssertionError("; ".join(bad))
            if args.layout == "ortho":
                svg = render.render_svg(t, ortho_layout, opts)
                metrics = (
                    f"nodes={len(ortho_layout.positions)} "
                    f"area={ortho.ortho_area(ortho_layout)}"
                )
            else:
                hx = hexgrid.resolve_overlaps(hexgrid.ortho_to_hex(ortho_layout))
                bad = hexgrid.check_hex_valid(hx)
                if bad:
                    raise AssertionError("; ".join(bad))
                svg = render.render_svg(t, hx, opts)
                total_bends, max_bends = hexgrid.count_bends(hx)
                metrics = (
                    f"nodes={len(hx.nodes)} area={hexgrid.hex_area(hx)} "
                    f"bends={total_bends} max_bends_per_edge={max_bends}"
                )
    except (AssertionError, hexgrid.UnresolvableOverlap, render.RenderError) as exc:
        print(f"pipeline failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _write_output(args.out, svg)
    print(metrics, file=sys.stderr)
    return EXIT_OK


def cmd_gen(args):
    weights = tuple(float(w) for w in args.weights.split(","))
    g, trace = graphmod.gen_dh_random(args.n, args.seed, weights)
    lines = [f"# generated: n={args.n} seed={args.seed} weights={args.weights}"]
    for step in trace.steps:
        lines.append(f"# extend: {step.kind} new={step.new_vertex} anchor={step.anchor_vertex}")
    text = "\n".join(lines) + "\n" + graphmod.graph_to_edge_text(g)
    _write_output(args.out, text)
    return EXIT_OK


def cmd_maxsub(args):
    g = _load_graph(args.input)
    try:
        subset = recognize.max_dh_subgraph_bruteforce(g, args.k)
    except recognize.TooLarge as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if subset is None:
        print("none")
    else:
        print(" ".join(str(v) for v in sorted(subset)))
    return EXIT_OK


def _check_one(path):
    """Violations for one serialized artifact (ortho, hex, or SVG)."""
    text = _read_input(path)
    stripped = text.lstrip()
    if stripped.startswith("<?xml") or stripped.startswith("<svg"):
        paths = render.svg_sampled_paths(text)
        if not render.check_smoothness(paths):
            return ["sharp turn in rendered path"]
        return []
    body_lines = [
        ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")
    ]
    if any(ln.split()[0] in ("root", "run") or "u=" in ln for ln in body_lines):
        return hexgrid.check_hex_valid(hexgrid.hex_from_text(text))
    return ortho.check_ortho_valid(ortho.ortho_from_text(text))


def cmd_check(args):
    worst = EXIT_OK
    for path in args.files:
        violations = _check_one(path)
        for v in violations:
            print(f"{path}: {v}")
        if violations:
            worst = EXIT_INVALID
    return worst


def build_parser():
    parser = argparse.ArgumentParser(
        prog="traintracks",
        description="Recognize distance-hereditary graphs and draw them as train tracks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="print the elimination sequence of a graph")
    p.add_argument("input", nargs="?", default="-", help="edge-list file or - for stdin")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("tree", help="print the junction-tree serialization of a graph")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("draw", help="render a graph as an SVG train-track drawing")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--layout", choices=("ortho", "hex", "radial"), default="hex")
    p.add_argument("--out", default="-", help="output SVG path or - for stdout")
    p.add_argument("--ratio", type=float, default=radial.DEFAULT_RATIO,
                   help="per-level shrink factor for the radial layout")
    p.add_argument("--cell-size", type=float, default=24.0)
    p.add_argument("--junction-radius", type=float, default=6.0)
    p.add_argument("--labels", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("gen", help="generate a random distance-hereditary graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", default="0.3334,0.3333,0.3333",
                   help="pendant,true-twin,false-twin probabilities")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("maxsub", help="largest distance-hereditary induced subgraph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_maxsub)

    p = sub.add_parser("check", help="validate serialized layout or SVG artifacts")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
