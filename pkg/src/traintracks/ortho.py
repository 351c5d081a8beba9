"""Upward orthogonal straight-line layout of a junction tree on the integer grid.

Rooting the free tree at a leaf makes it a binary tree (internal nodes have
degree three).  Each node composes its two child boxes either side-by-side
(small child below, big child to the right) or stacked (small child to the
right, big child pushed below it), picking the option that keeps the long
edge short and the bounding box small.  The result is planar, keeps sibling
subtree boxes disjoint, and stays within O(n log n) grid area.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import DeltaTree, validate_tree, TreeError


@dataclass
class RootedBinaryTree:
    """A junction tree oriented away from one of its leaves."""

    root: int
    children: dict[int, tuple[int, ...]]
    parent: dict[int, int]
    tree: DeltaTree

    def size(self):
        return len(self.children)


@dataclass
class OrthoLayout:
    """Integer-grid positions plus parent->child segments, y growing downward."""

    positions: dict[int, tuple[int, int]]
    segments: list[tuple[int, int]]  # (parent id, child id)
    root: int

    def children_map(self):
        kids: dict[int, list[int]] = {n: [] for n in self.positions}
        for p, c in self.segments:
            kids[p].append(c)
        return kids


def root_at_leaf(t: DeltaTree, leaf: int | None = None) -> RootedBinaryTree:
    """Orient the tree away from a leaf (default: the lowest-id leaf).

    Children are ordered by subtree size descending, ties by node id.
    """
    violations = validate_tree(t)
    if violations:
        raise TreeError("; ".join(violations))
    if leaf is None:
        leaf = min(t.leaves)
    elif leaf not in t.leaves:
        raise TreeError(f"node {leaf} is not a leaf")

    nbrs = t.neighbor_map()
    parent = {leaf: leaf}
    order = [leaf]
    children: dict[int, list[int]] = {}
    queue = [leaf]
    while queue:
        nxt = []
        for u in queue:
            kids = [
                other
                for _, (other, _) in sorted(nbrs[u].items())
                if other != parent[u]
            ]
            children[u] = kids
            for k in kids:
                parent[k] = u
                order.append(k)
            nxt.extend(kids)
        queue = nxt

    sizes = {n: 1 for n in order}
    for u in reversed(order):
        for k in children[u]:
            sizes[u] += sizes[k]
    for u in children:
        children[u].sort(key=lambda k: (-sizes[k], k))

    del parent[leaf]
    return RootedBinaryTree(leaf, {u: tuple(k) for u, k in children.items()}, parent, t)


def _postorder(rbt: RootedBinaryTree):
    order = []
    stack = [rbt.root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(rbt.children[u])
    order.reverse()
    return order


def layout_upward_ortho(rbt: RootedBinaryTree) -> OrthoLayout:
    """Deterministic upward orthogonal straight-line grid drawing.

    Each subtree occupies a bounding box with its root at the top-left
    corner.  Binary nodes choose between two compositions:

      side: small child directly below (unit vertical edge), big child at
            the same row to the right (horizontal edge jumping the small box);
      stack: small child directly to the right (unit horizontal edge), big
             child below the small box (vertical edge hugging column 0).

    The choice minimizes (length of the long edge, box area), which keeps
    boxes squarish and edge lengths near the square root of the subtree area.
    """
    sizes = {}
    boxes = {}  # node -> (w, h)
    plan = {}  # node -> ("side"|"stack", small child, big child)
    for u in _postorder(rbt):
        kids = rbt.children[u]
        for k in kids:
            sizes[k] = sizes.get(k, 1)
        sizes[u] = 1 + sum(sizes[k] for k in kids)
        if not kids:
            boxes[u] = (1, 1)
        elif len(kids) == 1:
            w, h = boxes[kids[0]]
            boxes[u] = (w, 1 + h)
            plan[u] = ("chain", kids[0], None)
        else:
            big, small = kids  # children come size-descending
            ws, hs = boxes[small]
            wb, hb = boxes[big]
            side = (ws + wb, max(1 + hs, hb))
            stack = (max(1 + ws, wb), hs + hb)
            side_cost = (ws, side[0] * side[1])
            stack_cost = (hs, stack[0] * stack[1])
            if side_cost <= stack_cost:
                boxes[u] = side
                plan[u] = ("side", small, big)
            else:
                boxes[u] = stack
                plan[u] = ("stack", small, big)

    positions = {}
    segments = []
    stack = [(rbt.root, 0, 0)]
    while stack:
        u, x, y = stack.pop()
        positions[u] = (x, y)
        if u not in plan:
            continue
        mode, small, big = plan[u]
        if mode == "chain":
            segments.append((u, small))
            stack.append((small, x, y + 1))
        elif mode == "side":
            segments.append((u, small))
            segments.append((u, big))
            stack.append((small, x, y + 1))
            stack.append((big, x + boxes[small][0], y))
        else:
            segments.append((u, small))
            segments.append((u, big))
            stack.append((small, x + 1, y))
            stack.append((big, x, y + boxes[small][1]))

    return OrthoLayout(positions, segments, rbt.root)


def ortho_area(layout: OrthoLayout) -> int:
    """Bounding-box area in grid units (a single node occupies 1)."""
    xs = [p[0] for p in layout.positions.values()]
    ys = [p[1] for p in layout.positions.values()]
    return (max(xs) - min(xs) + 1) * (max(ys) - min(ys) + 1)


def check_ortho_valid(layout: OrthoLayout) -> list[str]:
    """Violations of the drawing contract; empty when valid.

    Checks position distinctness, axis-parallel segments, upwardness,
    planarity (overlaps, crossings, and T-touches), and disjointness of
    sibling subtree bounding boxes.
    """
    violations = []
    pos = layout.positions

    seen = {}
    for node, p in pos.items():
        if p in seen:
            violations.append(f"position collision at {p}: nodes {seen[p]} and {node}")
        else:
            seen[p] = node

    for parent, child in layout.segments:
        px, py = pos[parent]
        cx, cy = pos[child]
        if px != cx and py != cy:
            violations.append(f"segment {parent}-{child} is not axis-parallel")
        if cy < py:
            violations.append(f"segment {parent}-{child} is not upward")

    # Planarity via unit-interval and lattice-point occupancy (all segments
    # are axis-parallel, so crossings happen at integer points or as
    # collinear overlaps of unit intervals).
    unit_owner = {}
    point_hits: dict[tuple[int, int], list[tuple[tuple[int, int], bool]]] = {}
    for parent, child in layout.segments:
        a, b = pos[parent], pos[child]
        edge = (parent, child)
        points = _grid_points(a, b)
        for i, pt in enumerate(points):
            is_end = i == 0 or i == len(points) - 1
            point_hits.setdefault(pt, []).append((edge, is_end))
            if i + 1 < len(points):
                unit = tuple(sorted((pt, points[i + 1])))
                if unit in unit_owner and unit_owner[unit] != edge:
                    violations.append(
                        f"segment overlap between {unit_owner[unit]} and {edge}"
                    )
                else:
                    unit_owner[unit] = edge

    for pt, hits in point_hits.items():
        edges_here = {e for e, _ in hits}
        if len(edges_here) < 2:
            continue
        interior = [e for e, is_end in hits if not is_end]
        if interior:
            violations.append(f"segment crossing at {pt}")
        else:
            # Endpoint meetings are fine only at a shared node.
            node = seen.get(pt)
            if node is None or any(node not in e for e in edges_here):
                violations.append(f"segments touch at non-shared point {pt}")

    violations.extend(_check_subtree_separation(layout))
    return violations


def _grid_points(a, b):
    (x1, y1), (x2, y2) = a, b
    if x1 == x2:
        step = 1 if y2 >= y1 else -1
        return [(x1, y) for y in range(y1, y2 + step, step)]
    if y1 == y2:
        step = 1 if x2 >= x1 else -1
        return [(x, y1) for x in range(x1, x2 + step, step)]
    return [a, b]  # diagonal; already reported as non-axis-parallel


def _check_subtree_separation(layout: OrthoLayout) -> list[str]:
    kids = layout.children_map()
    order = [layout.root]
    idx = 0
    while idx < len(order):
        order.extend(kids[order[idx]])
        idx += 1

    bbox = {}
    for u in reversed(order):
        x, y = layout.positions[u]
        x0, y0, x1, y1 = x, y, x, y
        for k in kids[u]:
            kx0, ky0, kx1, ky1 = bbox[k]
            x0, y0 = min(x0, kx0), min(y0, ky0)
            x1, y1 = max(x1, kx1), max(y1, ky1)
        bbox[u] = (x0, y0, x1, y1)

    violations = []
    for u in order:
        siblings = kids[u]
        for i in range(len(siblings)):
            for j in range(i + 1, len(siblings)):
                a = bbox[siblings[i]]
                b = bbox[siblings[j]]
                if a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]:
                    violations.append(
                        f"sibling subtree boxes of {siblings[i]} and {siblings[j]} overlap"
                    )
    return violations


def ortho_to_text(layout: OrthoLayout) -> str:
    """`node <id> <x> <y>` and `segment <parent> <child>` lines."""
    lines = [
        f"node {node} {x} {y}"
        for node, (x, y) in sorted(layout.positions.items())
    ]
    lines.extend(f"segment {p} {c}" for p, c in sorted(layout.segments))
    return "\n".join(lines) + "\n"


def ortho_from_text(text: str) -> OrthoLayout:
    positions = {}
    segments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "node":
                positions[int(parts[1])] = (int(parts[2]), int(parts[3]))
            elif parts[0] == "segment":
                segments.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    child_nodes = {c for _, c in segments}
    roots = [n for n in positions if n not in child_nodes]
    if len(roots) != 1:
        raise ValueError(f"expected exactly one root, found {sorted(roots)}")
    return OrthoLayout(positions, segments, roots[0])
