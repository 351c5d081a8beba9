"""Radial three-slope drawing of a junction tree.

Every edge is a straight segment pointing in one of three directions 120
degrees apart.  Edges shrink geometrically with depth; below a closed-form
ratio bound the subtrees of a full balanced tree can never collide, so the
drawing stays crossing-free.  Used for the snowflake renderings of cliques.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import segments_cross
from .tree import DeltaTree, validate_tree, TreeError


def max_shrink_ratio() -> float:
    """Largest safe per-level edge shrink factor, about 0.524."""
    r3 = math.sqrt(3.0)
    return (r3 * math.sqrt(4.0 * r3 + 1.0) - r3) / 6.0


DEFAULT_RATIO = 0.45


@dataclass
class RadialLayout:
    positions: dict[int, tuple[float, float]]
    edges: list[tuple[int, int]]
    root: int


def layout_radial_trident(t: DeltaTree, ratio: float = DEFAULT_RATIO) -> RadialLayout:
    """Place the tree around its center with edges along three fixed slopes.

    The center node sits at the origin; a junction sends each remaining
    edge at +/-120 degrees from its incoming direction, scaled by `ratio`
    per depth level.  `ratio` must lie in (0, max_shrink_ratio()).
    """
    bound = max_shrink_ratio()
    if not 0.0 < ratio < bound:
        raise ValueError(f"ratio must be in (0, {bound:.6f}), got {ratio}")
    violations = validate_tree(t)
    if violations:
        raise TreeError("; ".join(violations))

    nbrs = t.neighbor_map()
    root = _tree_center(t)
    positions = {root: (0.0, 0.0)}
    edges = []
    # (node, position, incoming angle or None, depth)
    stack = [(root, (0.0, 0.0), None, 0)]
    while stack:
        node, pos, incoming, depth = stack.pop()
        outgoing = [
            (slot, other)
            for slot, (other, _) in sorted(nbrs[node].items())
            if incoming is None or other != incoming[0]
        ]
        if incoming is None:
            base_angles = [90.0 + 120.0 * i for i in range(len(outgoing))]
        else:
            base_angles = [incoming[1] + 120.0, incoming[1] - 120.0][: len(outgoing)]
        length = ratio**depth
        for (slot, other), angle in zip(outgoing, base_angles):
            rad = math.radians(angle)
            q = (pos[0] + length * math.cos(rad), pos[1] + length * math.sin(rad))
            positions[other] = q
            edges.append((node, other))
            stack.append((other, q, (node, angle), depth + 1))
    return RadialLayout(positions, edges, root)


def _tree_center(t: DeltaTree) -> int:
    """Center of the free tree by leaf peeling; ties go to the lower id."""
    adj = {n: set() for n in t.nodes()}
    for (a, _), (b, _) in t.edges:
        adj[a].add(b)
        adj[b].add(a)
    remaining = dict(adj)
    while len(remaining) > 2:
        shed = [n for n, nb in remaining.items() if len(nb) <= 1]
        for n in shed:
            for w in remaining[n]:
                remaining[w].discard(n)
            del remaining[n]
    return min(remaining)


def radial_crossings(layout: RadialLayout) -> int:
    """Number of crossing segment pairs (shared endpoints excluded)."""
    segs = [
        (layout.positions[a], layout.positions[b])
        for a, b in layout.edges
    ]
    count = 0
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if segments_cross(*segs[i], *segs[j]):
                count += 1
    return count
