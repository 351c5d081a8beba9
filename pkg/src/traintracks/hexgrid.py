"""Hexagonal-grid drawings obtained from orthogonal layouts.

The grid's cell sides are covered by two curve families: u-curves waving
horizontally and v-curves running along the slanted/vertical sides.  A
u-curve and a v-curve overlap on one vertical cell side, whose lower end is
the primary point and whose upper end is the backup point.  An orthogonal
node at (x, y) lands on Primary(u=y, v=x); horizontal segments become
u-curve runs, vertical segments v-curve runs.  Every expanded segment is a
single cell side, so all slopes are 1/2, -1/2, or vertical, and each edge is
stored as just its two endpoints plus a curve tag.

Cartesian embedding: Primary(u, v) = (4v + 2u, 2u), Backup = Primary + (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .ortho import OrthoLayout, check_ortho_valid

PRIMARY = "primary"
BACKUP = "backup"

U_RUN = "U"
V_RUN = "V"

LOWER = "lower"
UPPER = "upper"


class UnresolvableOverlap(RuntimeError):
    """Neither a slot flip nor a lane flip separated two overlapping edges."""


@dataclass(frozen=True)
class HexPoint:
    u: int
    v: int
    slot: str = PRIMARY

    def cartesian(self):
        x, y = 4 * self.v + 2 * self.u, 2 * self.u
        if self.slot == BACKUP:
            y += 1
        return (x, y)


def primary(u, v):
    return (4 * v + 2 * u, 2 * u)


def backup(u, v):
    return (4 * v + 2 * u, 2 * u + 1)


@dataclass(frozen=True)
class Run:
    """One edge: a stretch of a single u-curve or v-curve between two nodes."""

    a: int
    b: int
    kind: str
    lane: str = LOWER


@dataclass
class HexLayout:
    nodes: dict[int, HexPoint]
    runs: list[Run]
    root: int
    # Explicit polylines (edge key -> points) override run expansion; used
    # when re-checking serialized drawings whose polylines may be tampered.
    polylines: dict[tuple[int, int], list[tuple[int, int]]] | None = None

    def node_point(self, node):
        return self.nodes[node].cartesian()

    def edge_polyline(self, run: Run):
        if self.polylines is not None and (run.a, run.b) in self.polylines:
            return list(self.polylines[(run.a, run.b)])
        return expand_run(self, run)


def ortho_to_hex(layout: OrthoLayout, validate: bool = True) -> HexLayout:
    """Map an orthogonal drawing onto the hex grid, primary points only."""
    if validate:
        violations = check_ortho_valid(layout)
        if violations:
            raise ValueError("invalid orthogonal layout: " + "; ".join(violations))
    nodes = {
        node: HexPoint(u=y, v=x)
        for node, (x, y) in layout.positions.items()
    }
    runs = []
    for parent, child in layout.segments:
        px, py = layout.positions[parent]
        cx, cy = layout.positions[child]
        kind = V_RUN if px == cx else U_RUN
        runs.append(Run(parent, child, kind))
    return HexLayout(nodes, runs, layout.root)


def expand_run(h: HexLayout, run: Run) -> list[tuple[int, int]]:
    """Cartesian polyline of one edge, oriented from run.a to run.b.

    Unit steps: a v-curve climbs a vertical side then a +1/2 side; a lower
    u-curve wave dips -1/2 then +1/2; an upper wave uses the backup points
    and the cell's top corner.  Endpoints are joined to the nodes' current
    (slot-adjusted) points with vertical connectors where needed.
    """
    pa, pb = h.nodes[run.a], h.nodes[run.b]
    if run.kind == V_RUN:
        if pa.v != pb.v:
            raise ValueError(f"v-curve run endpoints on different v-curves: {run}")
        lo, hi = sorted((pa.u, pb.u))
        v = pa.v
        pts = [primary(lo, v)]
        for u in range(lo, hi):
            pts.append(backup(u, v))
            pts.append(primary(u + 1, v))
    else:
        if pa.u != pb.u:
            raise ValueError(f"u-curve run endpoints on different u-curves: {run}")
        lo, hi = sorted((pa.v, pb.v))
        u = pa.u
        if run.lane == LOWER:
            pts = [primary(u, lo)]
            for v in range(lo, hi):
                pts.append((4 * v + 2 * u + 2, 2 * u - 1))
                pts.append(primary(u, v + 1))
        else:
            pts = [backup(u, lo)]
            for v in range(lo, hi):
                pts.append((4 * v + 2 * u + 2, 2 * u + 2))
                pts.append(backup(u, v + 1))

    first_end = pa if _natural_start(run, pa, pb) else pb
    last_end = pb if first_end is pa else pa
    start_pt, end_pt = first_end.cartesian(), last_end.cartesian()
    if pts[0] != start_pt:
        # A backup-slot node already sits one step along the curve; start
        # there instead of detouring through the primary point.
        if len(pts) > 1 and pts[1] == start_pt:
            pts = pts[1:]
        else:
            pts.insert(0, start_pt)
    if pts[-1] != end_pt:
        if len(pts) > 1 and pts[-2] == end_pt:
            pts = pts[:-1]
        else:
            pts.append(end_pt)
    if first_end is not pa:
        pts.reverse()
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _natural_start(run: Run, pa: HexPoint, pb: HexPoint) -> bool:
    """Does the canonical low-to-high expansion start at run.a's curve position?"""
    if run.kind == V_RUN:
        return pa.u <= pb.u
    return pa.v <= pb.v


def expand_all(h: HexLayout) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Edge key (a, b) -> expanded polyline, oriented a to b."""
    return {(run.a, run.b): expand_run(h, run) for run in h.runs}


def _bfs_order(h: HexLayout):
    adj: dict[int, list[int]] = {n: [] for n in h.nodes}
    for run in h.runs:
        adj[run.a].append(run.b)
        adj[run.b].append(run.a)
    for n in adj:
        adj[n].sort()
    order = [h.root]
    seen = {h.root}
    idx = 0
    while idx < len(order):
        for w in adj[order[idx]]:
            if w not in seen:
                seen.add(w)
                order.append(w)
        idx += 1
    return order


def resolve_overlaps(h: HexLayout) -> HexLayout:
    """Separate edges that share their first cell side at a common node.

    Nodes are visited in BFS order from the root.  At a conflicted node the
    node's point is flipped to its backup first; if the conflict persists the
    slot flip is reverted and one conflicting u-curve run is rerouted to the
    other wave lane.  Layouts produced by ortho_to_hex from valid orthogonal
    drawings come out unchanged.
    """
    out = HexLayout(dict(h.nodes), list(h.runs), h.root)
    run_index = {i: run for i, run in enumerate(out.runs)}

    incidence: dict[int, list[int]] = {n: [] for n in out.nodes}
    for i, run in run_index.items():
        incidence[run.a].append(i)
        incidence[run.b].append(i)
    for node in incidence:
        incidence[node].sort(
            key=lambda i: (min(run_index[i].a, run_index[i].b),
                           max(run_index[i].a, run_index[i].b)),
        )

    def incident(node):
        return incidence[node]

    def first_segment(node, i):
        run = run_index[i]
        pts = expand_run(out, run)
        if run.b == node:
            pts.reverse()
        if len(pts) < 2:
            return None
        return tuple(sorted(pts[:2]))

    def conflicts(node):
        segs = {}
        found = []
        for i in incident(node):
            seg = first_segment(node, i)
            if seg is None:
                continue
            if seg in segs:
                found.append((segs[seg], i))
            else:
                segs[seg] = i
        return found

    for node in _bfs_order(out):
        pairs = conflicts(node)
        if not pairs:
            continue
        # Slot flip first.
        original = out.nodes[node]
        if original.slot == PRIMARY:
            out.nodes[node] = replace(original, slot=BACKUP)
            if not conflicts(node):
                continue
            out.nodes[node] = original
        # Then reroute conflicting u-curve runs one lane flip at a time.
        for _ in range(len(incident(node))):
            pairs = conflicts(node)
            if not pairs:
                break
            flipped = False
            for i, j in pairs:
                for k in (i, j):
                    run = run_index[k]
                    if run.kind == U_RUN:
                        new_lane = UPPER if run.lane == LOWER else LOWER
                        run_index[k] = replace(run, lane=new_lane)
                        flipped = True
                        break
                if flipped:
                    break
            if not flipped:
                raise UnresolvableOverlap(
                    f"edges at node {node} overlap and no u-curve run can move lanes"
                )
        else:
            raise UnresolvableOverlap(f"conflicts at node {node} persist after lane flips")

    out.runs = [run_index[i] for i in sorted(run_index)]
    return out


def check_hex_valid(h: HexLayout) -> list[str]:
    """Violations of the hex drawing contract; empty when valid.

    Verifies the slope set, node distinctness, endpoint attachment, absence
    of shared positive-length segments, and planarity.  Every legal segment
    is a single lattice cell side, so overlaps are duplicate sides and
    crossings are contested lattice points.
    """
    violations = []
    node_at = {}
    for node, hp in sorted(h.nodes.items()):
        pt = hp.cartesian()
        if pt in node_at:
            violations.append(f"position collision at {pt}: nodes {node_at[pt]} and {node}")
        else:
            node_at[pt] = node

    polylines = {}
    for run in h.runs:
        try:
            polylines[(run.a, run.b)] = h.edge_polyline(run)
        except ValueError as exc:
            violations.append(str(exc))
    if violations:
        return violations

    side_owner = {}
    point_hits: dict[tuple[int, int], list] = {}
    for edge, pts in polylines.items():
        if pts[0] != h.node_point(edge[0]) or pts[-1] != h.node_point(edge[1]):
            violations.append(f"edge {edge} does not connect its node points")
        seen_pts = set()
        for i, p in enumerate(pts):
            if p in seen_pts:
                violations.append(f"edge {edge} self-intersects at {p}")
            seen_pts.add(p)
            point_hits.setdefault(p, []).append((edge, i in (0, len(pts) - 1)))
            if i + 1 < len(pts):
                q = pts[i + 1]
                dx, dy = q[0] - p[0], q[1] - p[1]
                if (abs(dx), abs(dy)) not in ((0, 1), (2, 1)):
                    violations.append(f"illegal slope on edge {edge}: {p} -> {q}")
                side = tuple(sorted((p, q)))
                if side in side_owner and side_owner[side] != edge:
                    violations.append(f"edge overlap between {side_owner[side]} and {edge}")
                else:
                    side_owner[side] = edge

    for pt, hits in point_hits.items():
        edges_here = {e for e, _ in hits}
        if len(edges_here) < 2:
            continue
        node = node_at.get(pt)
        trouble = node is None
        if not trouble:
            for edge, is_end in hits:
                if node not in edge or not is_end:
                    trouble = True
                    break
        if trouble:
            violations.append(f"crossing at {pt}")
    return violations


def count_bends(h: HexLayout):
    """(total bends, max bends on one edge): slope changes along polylines."""
    total = 0
    worst = 0
    for run in h.runs:
        pts = h.edge_polyline(run)
        bends = 0
        for i in range(1, len(pts) - 1):
            d1 = (pts[i][0] - pts[i - 1][0], pts[i][1] - pts[i - 1][1])
            d2 = (pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1])
            if d1[0] * d2[1] != d1[1] * d2[0]:
                bends += 1
        total += bends
        worst = max(worst, bends)
    return total, worst


def hex_area(h: HexLayout) -> int:
    """Cartesian bounding-box area over all expanded points (single node = 1)."""
    xs, ys = [], []
    for hp in h.nodes.values():
        x, y = hp.cartesian()
        xs.append(x)
        ys.append(y)
    for run in h.runs:
        for x, y in h.edge_polyline(run):
            xs.append(x)
            ys.append(y)
    return (max(xs) - min(xs) + 1) * (max(ys) - min(ys) + 1)


def descriptor_field_count(h: HexLayout) -> int:
    """Stored fields across edge descriptors: two endpoints plus a curve tag."""
    return 3 * len(h.runs)


def hex_to_text(h: HexLayout, include_polylines: bool = False) -> str:
    """`node` and `run` lines; optionally the expanded `polyline` records."""
    lines = [f"root {h.root}"]
    for node, hp in sorted(h.nodes.items()):
        lines.append(f"node {node} u={hp.u} v={hp.v} slot={hp.slot}")
    for run in sorted(h.runs, key=lambda r: (r.a, r.b)):
        lines.append(f"run {run.a} {run.b} kind={run.kind} lane={run.lane}")
    if include_polylines:
        for run in sorted(h.runs, key=lambda r: (r.a, r.b)):
            pts = " ".join(f"{x},{y}" for x, y in h.edge_polyline(run))
            lines.append(f"polyline {run.a}-{run.b} {pts}")
    return "\n".join(lines) + "\n"


def hex_from_text(text: str) -> HexLayout:
    nodes = {}
    runs = []
    root = None
    polylines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "root":
                root = int(parts[1])
            elif parts[0] == "node":
                fields = dict(p.split("=") for p in parts[2:])
                nodes[int(parts[1])] = HexPoint(
                    u=int(fields["u"]), v=int(fields["v"]), slot=fields["slot"]
                )
            elif parts[0] == "run":
                fields = dict(p.split("=") for p in parts[3:])
                runs.append(Run(int(parts[1]), int(parts[2]), fields["kind"], fields["lane"]))
            elif parts[0] == "polyline":
                a, b = parts[1].split("-")
                pts = []
                for token in parts[2:]:
                    x, y = token.split(",")
                    pts.append((int(x), int(y)))
                polylines[(int(a), int(b))] = pts
            else:
                raise ValueError(f"unknown record {parts[0]!r}")
        except (IndexError, KeyError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if root is None:
        root = min(nodes) if nodes else 0
    return HexLayout(nodes, runs, root, polylines or None)
