"""SVG rendering of junction-tree layouts as smooth train tracks.

Edges become polyline tracks; at each junction the permitted port pairs are
joined by quadratic arcs that keep the tangent continuous, so every drawn
leaf-to-leaf connection is a curve free of sharp turns.  At a delta junction
all three port pairs merge; at a lambda junction only head-tail pairs do,
and the two tails visibly stop short of each other.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .geometry import turn_angle
from .hexgrid import HexLayout, expand_run
from .ortho import OrthoLayout
from .radial import RadialLayout
from .tree import DeltaTree, validate_tree, TreeError

ARC_SAMPLES = 16


class RenderError(ValueError):
    """Render options incompatible with the layout geometry."""


@dataclass(frozen=True)
class RenderOptions:
    cell_size: float = 24.0
    junction_radius: float = 6.0
    show_labels: bool = True
    theme: str = "light"

    def __post_init__(self):
        if self.cell_size <= 0 or self.junction_radius <= 0:
            raise ValueError("cell size and junction radius must be positive")
        if self.theme not in ("light", "dark"):
            raise ValueError(f"unknown theme {self.theme!r}")


@dataclass
class TrackGeometry:
    """Pixel-space centerlines: node points, trimmed edge tracks, junction arcs."""

    points: dict[int, tuple[float, float]]
    tracks: dict[tuple[int, int], list[tuple[float, float]]]
    arcs: dict[int, list[tuple[tuple[int, int], tuple, tuple, tuple]]]
    # arcs[j] = [((slot_a, slot_b), A, J, B), ...]


def _layout_polylines(layout, opts):
    """(points, polylines keyed by unordered node pair, oriented pair list)."""
    s = opts.cell_size
    if isinstance(layout, HexLayout):
        points = {n: _scale(hp.cartesian(), s) for n, hp in layout.nodes.items()}
        polys = {}
        for run in layout.runs:
            pts = [_scale(p, s) for p in expand_run(layout, run)]
            polys[_key(run.a, run.b)] = (run.a, pts)
        return points, polys
    if isinstance(layout, OrthoLayout):
        points = {n: _scale(p, s) for n, p in layout.positions.items()}
        polys = {
            _key(a, b): (a, [points[a], points[b]])
            for a, b in layout.segments
        }
        return points, polys
    if isinstance(layout, RadialLayout):
        points = {n: _scale(p, s) for n, p in layout.positions.items()}
        polys = {
            _key(a, b): (a, [points[a], points[b]])
            for a, b in layout.edges
        }
        return points, polys
    raise TypeError(f"cannot render layout of type {type(layout).__name__}")


def _scale(p, s):
    return (p[0] * s, p[1] * s)


def _key(a, b):
    return (a, b) if a <= b else (b, a)


def track_geometry(tree: DeltaTree, layout, opts: RenderOptions) -> TrackGeometry:
    """Compute the drawing's centerlines.

    Tracks are trimmed back by the junction radius where they meet a
    junction, and each permitted port pair is bridged by a quadratic arc
    through the junction point (tangent-continuous with both tracks).
    """
    violations = validate_tree(tree)
    if violations:
        raise TreeError("; ".join(violations))
    points, polys = _layout_polylines(layout, opts)
    missing = (set(tree.leaves) | set(tree.junctions)) - set(points)
    if missing:
        raise RenderError(f"layout lacks positions for nodes {sorted(missing)}")

    nbrs = tree.neighbor_map()
    tree_keys = {_key(a, b) for (a, _), (b, _) in tree.edges}
    if set(polys) != tree_keys:
        raise RenderError("layout edges do not match tree edges")

    r = opts.junction_radius
    tracks = {}
    trim_end = {}  # (junction, edge key) -> trimmed endpoint
    for key, (_, pts) in polys.items():
        oriented = list(pts) if points[key[0]] == pts[0] else list(reversed(pts))
        if points[key[0]] != oriented[0]:
            raise RenderError(f"edge {key} polyline detached from node {key[0]}")
        for node_idx, node in enumerate(key):
            if node not in tree.junctions:
                continue
            if node_idx == 0:
                p0, p1 = oriented[0], oriented[1]
            else:
                p0, p1 = oriented[-1], oriented[-2]
            length = math.dist(p0, p1)
            if r >= length / 2:
                raise RenderError(
                    f"junction radius {r} too large for segment of length {length:.3f}"
                )
            new_pt = _along(p0, p1, r)
            if node_idx == 0:
                oriented[0] = new_pt
            else:
                oriented[-1] = new_pt
            trim_end[(node, key)] = new_pt
        tracks[key] = oriented

    arcs: dict[int, list] = {}
    for j, junction in sorted(tree.junctions.items()):
        slot_edges = {
            slot: _key(j, other)
            for slot, (other, _) in nbrs[j].items()
        }
        entries = []
        for sa in (0, 1, 2):
            for sb in (sa + 1, sa + 2):
                if sb > 2:
                    continue
                if not junction.permits(sa, sb):
                    continue
                a_pt = trim_end[(j, slot_edges[sa])]
                b_pt = trim_end[(j, slot_edges[sb])]
                entries.append(((sa, sb), a_pt, points[j], b_pt))
        arcs[j] = entries
    return TrackGeometry(points, tracks, arcs)


def _along(p, q, dist):
    length = math.dist(p, q)
    t = dist / length
    return (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def _unit(p, q):
    length = math.dist(p, q)
    return ((q[0] - p[0]) / length, (q[1] - p[1]) / length)


def sample_quadratic(a, control, b, samples: int = ARC_SAMPLES):
    """Points along the quadratic Bezier from a to b, inclusive."""
    pts = []
    for i in range(samples + 1):
        t = i / samples
        mt = 1 - t
        pts.append(
            (
                mt * mt * a[0] + 2 * mt * t * control[0] + t * t * b[0],
                mt * mt * a[1] + 2 * mt * t * control[1] + t * t * b[1],
            )
        )
    return pts


_THEMES = {
    "light": {"bg": "#ffffff", "track": "#1f3d7a", "node": "#b03030", "label": "#202020"},
    "dark": {"bg": "#14161c", "track": "#9db9ff", "node": "#ff9d6b", "label": "#e8e8e8"},
}


def render_svg(tree: DeltaTree, layout, opts: RenderOptions | None = None) -> str:
    """Serialize the train-track drawing as a standalone SVG 1.1 document."""
    opts = opts or RenderOptions()
    geo = track_geometry(tree, layout, opts)
    colors = _THEMES[opts.theme]

    xs = [p[0] for p in geo.points.values()]
    ys = [p[1] for p in geo.points.values()]
    for pts in geo.tracks.values():
        xs.extend(p[0] for p in pts)
        ys.extend(p[1] for p in pts)
    margin = opts.cell_size
    x0, y0 = min(xs) - margin, min(ys) - margin
    width = (max(xs) - min(xs)) + 2 * margin
    height = (max(ys) - min(ys)) + 2 * margin

    stroke = max(opts.cell_size / 16.0, 0.75)
    dot = max(opts.cell_size / 6.0, 1.5)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(x0)} {_f(y0)} {_f(width)} {_f(height)}">',
        f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(width)}" height="{_f(height)}" '
        f'fill="{colors["bg"]}"/>',
        f'<g fill="none" stroke="{colors["track"]}" stroke-width="{_f(stroke)}" '
        'stroke-linecap="round" stroke-linejoin="round">',
    ]
    for (a, b), pts in sorted(geo.tracks.items()):
        d = f"M {_f(pts[0][0])} {_f(pts[0][1])} " + " ".join(
            f"L {_f(x)} {_f(y)}" for x, y in pts[1:]
        )
        lines.append(f'<path id="edge-{a}-{b}" d="{d}"/>')
    for j in sorted(geo.arcs):
        parts = []
        for (sa, sb), a_pt, ctrl, b_pt in geo.arcs[j]:
            parts.append(
                f"M {_f(a_pt[0])} {_f(a_pt[1])} "
                f"Q {_f(ctrl[0])} {_f(ctrl[1])} {_f(b_pt[0])} {_f(b_pt[1])}"
            )
        if parts:
            lines.append(f'<path id="junction-{j}" d="{" ".join(parts)}"/>')
    lines.append("</g>")

    lines.append(f'<g fill="{colors["node"]}" stroke="none">')
    for node in sorted(tree.leaves):
        x, y = geo.points[node]
        lines.append(f'<circle id="node-{node}" cx="{_f(x)}" cy="{_f(y)}" r="{_f(dot)}"/>')
    lines.append("</g>")

    if opts.show_labels:
        size = max(opts.cell_size * 0.45, 4.0)
        lines.append(
            f'<g fill="{colors["label"]}" font-family="monospace" font-size="{_f(size)}">'
        )
        for node in sorted(tree.leaves):
            x, y = geo.points[node]
            lines.append(
                f'<text x="{_f(x + dot * 1.4)}" y="{_f(y - dot * 0.8)}">'
                f"{tree.leaves[node]}</text>"
            )
        lines.append("</g>")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _f(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return text if text not in ("-0", "") else "0"


def check_smoothness(paths, tolerance: float = 5.0) -> bool:
    """True iff no sampled path ever turns by 90 degrees minus the tolerance.

    `paths` is an iterable of point sequences (sampled polylines).
    """
    limit = 90.0 - tolerance
    for pts in paths:
        dirs = []
        for i in range(len(pts) - 1):
            dx = pts[i + 1][0] - pts[i][0]
            dy = pts[i + 1][1] - pts[i][1]
            if abs(dx) < 1e-12 and abs(dy) < 1e-12:
                continue
            dirs.append((dx, dy))
        for d1, d2 in zip(dirs, dirs[1:]):
            if turn_angle(d1, d2) >= limit:
                return False
    return True


def permitted_routes(tree: DeltaTree):
    """Yield (leaf_a, leaf_b, hops) for every drawable leaf pair.

    hops is the ordered list of (junction id, entry slot, exit slot) the
    track passes through; each pair is yielded once (a < b by node id).
    """
    nbrs = tree.neighbor_map()
    for leaf in sorted(tree.leaves):
        start = nbrs[leaf][0]
        stack = [(start, [])]
        while stack:
            (node, slot), hops = stack.pop()
            if node in tree.leaves:
                if node > leaf:
                    yield leaf, node, hops
                continue
            junction = tree.junctions[node]
            for out_slot, nxt in sorted(nbrs[node].items()):
                if out_slot != slot and junction.permits(slot, out_slot):
                    stack.append((nxt, hops + [(node, slot, out_slot)]))


def sample_permitted_paths(tree: DeltaTree, layout, opts: RenderOptions | None = None,
                           samples: int = ARC_SAMPLES):
    """Sampled centerline of every drawable leaf-to-leaf connection.

    Returns {(leaf_a, leaf_b): points}; pass `.values()` to check_smoothness.
    """
    opts = opts or RenderOptions()
    geo = track_geometry(tree, layout, opts)
    nbrs = tree.neighbor_map()
    arc_lookup = {
        (j, frozenset(pair)): (a, ctrl, b)
        for j, entries in geo.arcs.items()
        for pair, a, ctrl, b in entries
    }
    paths = {}
    for leaf_a, leaf_b, hops in permitted_routes(tree):
        chain = [leaf_a] + [j for j, _, _ in hops] + [leaf_b]
        path = []
        for i in range(len(chain) - 1):
            key = _key(chain[i], chain[i + 1])
            pts = geo.tracks[key]
            if key[0] != chain[i]:
                pts = list(reversed(pts))
            path.extend(pts)
            if i + 1 < len(chain) - 1:
                j, slot_in, slot_out = hops[i]
                a, ctrl, b = arc_lookup[(j, frozenset((slot_in, slot_out)))]
                arc = sample_quadratic(a, ctrl, b, samples)
                if math.dist(arc[0], path[-1]) > math.dist(arc[-1], path[-1]):
                    arc = list(reversed(arc))
                path.extend(arc)
        paths[(leaf_a, leaf_b)] = path
    return paths


_PATH_D_RE = re.compile(r'\bd="([^"]+)"')
_TOKEN_RE = re.compile(r"[MLQ]|-?\d+(?:\.\d+)?")


def svg_sampled_paths(svg_text: str, samples: int = ARC_SAMPLES):
    """Sampled polylines from the path elements of an SVG produced here."""
    paths = []
    for match in _PATH_D_RE.finditer(svg_text):
        tokens = _TOKEN_RE.findall(match.group(1))
        idx = 0
        current = []
        pos = None
        while idx < len(tokens):
            cmd = tokens[idx]
            if cmd == "M":
                if current:
                    paths.append(current)
                pos = (float(tokens[idx + 1]), float(tokens[idx + 2]))
                current = [pos]
                idx += 3
            elif cmd == "L":
                pos = (float(tokens[idx + 1]), float(tokens[idx + 2]))
                current.append(pos)
                idx += 3
            elif cmd == "Q":
                ctrl = (float(tokens[idx + 1]), float(tokens[idx + 2]))
                end = (float(tokens[idx + 3]), float(tokens[idx + 4]))
                current.extend(sample_quadratic(pos, ctrl, end, samples)[1:])
                pos = end
                idx += 5
            else:
                raise ValueError(f"unsupported path token {cmd!r}")
        if current:
            paths.append(current)
    return paths
