"""Junction trees for train-track drawings.

A tree whose leaves are graph vertices and whose internal nodes are
three-way track junctions.  A delta junction lets traffic pass between all
three ports; a lambda junction blocks passage between its two tails.  The
tree encodes a graph: two leaves are adjacent exactly when the tree path
between them threads every junction through a permitted port pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, graph_equals
from .recognize import (
    EliminationSequence,
    EliminationStep,
    PENDANT_CUT,
    TRUE_TWIN_MERGE,
    FALSE_TWIN_MERGE,
    SequenceError,
    apply_sequence_forward,
)

DELTA = "delta"
LAMBDA = "lambda"


class TreeError(ValueError):
    """A structurally invalid junction tree."""


@dataclass(frozen=True)
class Junction:
    kind: str
    head: int | None = None  # port index, lambda only

    def __post_init__(self):
        if self.kind not in (DELTA, LAMBDA):
            raise ValueError(f"unknown junction kind {self.kind!r}")
        if self.kind == LAMBDA and self.head not in (0, 1, 2):
            raise ValueError(f"lambda junction needs head port 0..2, got {self.head}")
        if self.kind == DELTA and self.head is not None:
            raise ValueError("delta junction has no head port")

    def permits(self, port_a: int, port_b: int) -> bool:
        """May a track pass between these two ports?"""
        if self.kind == DELTA:
            return True
        return self.head in (port_a, port_b)


@dataclass
class DeltaTree:
    """Free tree of leaves (slot 0) and degree-3 junctions (ports 0..2).

    Edges join (node id, slot) endpoints; each port carries exactly one edge.
    """

    leaves: dict[int, int]  # node id -> graph vertex label
    junctions: dict[int, Junction]
    edges: set[tuple[tuple[int, int], tuple[int, int]]]

    def nodes(self):
        return sorted(set(self.leaves) | set(self.junctions))

    def neighbor_map(self):
        """node id -> {slot: (other id, other slot)}."""
        nbrs: dict[int, dict[int, tuple[int, int]]] = {
            n: {} for n in list(self.leaves) + list(self.junctions)
        }
        for (a, sa), (b, sb) in self.edges:
            nbrs[a][sa] = (b, sb)
            nbrs[b][sb] = (a, sa)
        return nbrs

    def edge_pairs(self):
        """Edges as sorted (id, id) pairs, ignoring slots."""
        return sorted(tuple(sorted((a, b))) for (a, _), (b, _) in self.edges)


def _edge(a, sa, b, sb):
    return tuple(sorted(((a, sa), (b, sb))))


def validate_tree(t: DeltaTree) -> list[str]:
    """All structural violations, empty when the tree is well formed."""
    violations = []
    ids = set(t.leaves) | set(t.junctions)
    if set(t.leaves) & set(t.junctions):
        violations.append("node id used as both leaf and junction")
    labels = list(t.leaves.values())
    if len(set(labels)) != len(labels):
        violations.append("duplicate leaf vertex labels")

    used_slots: dict[int, list[int]] = {n: [] for n in ids}
    degree = {n: 0 for n in ids}
    for (a, sa), (b, sb) in t.edges:
        for node, slot in ((a, sa), (b, sb)):
            if node not in ids:
                violations.append(f"edge endpoint {node} is not a node")
                continue
            if node in t.leaves and slot != 0:
                violations.append(f"leaf {node} uses slot {slot}")
            if node in t.junctions and slot not in (0, 1, 2):
                violations.append(f"junction {node} uses port {slot}")
            if slot in used_slots[node]:
                violations.append(f"port {slot} of node {node} used twice")
            used_slots[node].append(slot)
            degree[node] += 1
        if a == b:
            violations.append(f"self-edge at node {a}")

    for leaf in t.leaves:
        if degree.get(leaf, 0) != 1:
            violations.append(f"leaf {leaf} degree != 1")
    for j in t.junctions:
        if degree.get(j, 0) != 3:
            violations.append(f"junction {j} degree != 3")

    if len(t.edges) != max(len(ids) - 1, 0):
        violations.append("edge count != node count - 1")
    if ids:
        seen = set()
        adj: dict[int, list[int]] = {n: [] for n in ids}
        for (a, _), (b, _) in t.edges:
            if a in ids and b in ids:
                adj[a].append(b)
                adj[b].append(a)
        start = min(ids)
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(ids):
            violations.append("not connected")
    return violations


def build_delta_tree(g: Graph, seq: EliminationSequence, validate: bool = True) -> DeltaTree:
    """Grow the junction tree of g from its elimination sequence.

    Works backwards through the sequence, starting at the terminal edge.
    Each reinserted vertex replaces its survivor's attachment with a new
    junction: a delta for adjacent twins, a lambda hung by the head for
    non-adjacent twins, a lambda hung by a tail for pendants (survivor on
    the head).  Port 0 takes the old attachment, port 1 the survivor,
    port 2 the reinserted vertex.
    """
    if validate and not graph_equals(apply_sequence_forward(seq), g):
        raise SequenceError("sequence does not rebuild the given graph")

    u, v = seq.terminal_pair
    leaves = {u: u, v: v}
    junctions: dict[int, Junction] = {}
    edges = {_edge(u, 0, v, 0)}
    attachment = {u: (v, 0), v: (u, 0)}  # leaf label -> (node, slot) at the far end
    next_id = max(g.vertices, default=1) + 1

    for step in reversed(seq.steps):
        a, b = step.survivor, step.removed
        if a not in leaves or b in leaves:
            raise SequenceError(f"inconsistent step: {step}")
        j = next_id
        next_id += 1
        if step.kind == TRUE_TWIN_MERGE:
            junctions[j] = Junction(DELTA)
        elif step.kind == FALSE_TWIN_MERGE:
            junctions[j] = Junction(LAMBDA, head=0)
        else:
            junctions[j] = Junction(LAMBDA, head=1)  # survivor sits on the head
        far, far_slot = attachment[a]
        edges.discard(_edge(a, 0, far, far_slot))
        edges.add(_edge(j, 0, far, far_slot))
        edges.add(_edge(j, 1, a, 0))
        edges.add(_edge(j, 2, b, 0))
        leaves[b] = b
        attachment[a] = (j, 1)
        attachment[b] = (j, 2)
        if far in attachment and attachment[far] == (a, 0):
            attachment[far] = (j, 0)

    return DeltaTree(leaves, junctions, edges)


def semantics(t: DeltaTree) -> Graph:
    """The graph a junction tree encodes.

    Leaves u, v are adjacent iff the tree path between them passes every
    junction through a permitted port pair.
    """
    violations = validate_tree(t)
    if violations:
        raise TreeError("; ".join(violations))
    nbrs = t.neighbor_map()
    edges = set()
    for leaf in t.leaves:
        stack = [nbrs[leaf][0]]
        while stack:
            node, slot = stack.pop()
            if node in t.leaves:
                if node != leaf:
                    edges.add(tuple(sorted((t.leaves[leaf], t.leaves[node]))))
                continue
            junction = t.junctions[node]
            for out_slot, nxt in nbrs[node].items():
                if out_slot != slot and junction.permits(slot, out_slot):
                    stack.append(nxt)
    return Graph(t.leaves.values(), edges)


def tree_to_sequence(t: DeltaTree) -> EliminationSequence:
    """Shrink a junction tree back to a single edge, emitting the steps.

    Repeatedly takes the lowest-id junction with at least two leaf
    neighbors and replaces it: a delta merges its two smallest leaves
    (true twins), a lambda with a leaf on its head cuts the smallest tail
    leaf from it, a lambda with leaves only on its tails merges them
    (false twins).  The surviving leaf takes the junction's place.
    """
    violations = validate_tree(t)
    if violations:
        raise TreeError("; ".join(violations))
    if not t.junctions:
        # A junction-free tree is the terminal edge itself.
        pair = sorted(t.leaves.values())
        return EliminationSequence((), (pair[0], pair[1]))

    nbrs = t.neighbor_map()
    leaves = dict(t.leaves)
    junctions = dict(t.junctions)
    steps = []

    def reattach(leaf_id, other, other_slot):
        nbrs[leaf_id][0] = (other, other_slot)
        nbrs[other][other_slot] = (leaf_id, 0)

    while junctions:
        chosen = None
        for j in sorted(junctions):
            leaf_ports = {
                slot: node
                for slot, (node, _) in nbrs[j].items()
                if node in leaves
            }
            if len(leaf_ports) >= 2:
                chosen = (j, leaf_ports)
                break
        if chosen is None:
            raise TreeError("no junction with two leaf neighbors")  # pragma: no cover
        j, leaf_ports = chosen
        junction = junctions[j]
        if junction.kind == DELTA:
            pair_ids = sorted(leaf_ports.values(), key=lambda n: leaves[n])[:2]
            survivor_id, removed_id = sorted(pair_ids, key=lambda n: leaves[n])
            kind = TRUE_TWIN_MERGE
        else:
            tails = [s for s in (0, 1, 2) if s != junction.head]
            tail_leaves = sorted(
                (leaf_ports[s] for s in tails if s in leaf_ports),
                key=lambda n: leaves[n],
            )
            if junction.head in leaf_ports:
                survivor_id = leaf_ports[junction.head]
                removed_id = tail_leaves[0]
                kind = PENDANT_CUT
            else:
                survivor_id, removed_id = tail_leaves
                kind = FALSE_TWIN_MERGE
        steps.append(EliminationStep(kind, leaves[removed_id], leaves[survivor_id]))
        # The survivor leaf takes the junction's place in the tree.
        pair_slots = {s for s, n in leaf_ports.items() if n in (survivor_id, removed_id)}
        (rest_slot,) = set(nbrs[j]) - pair_slots
        other, other_slot = nbrs[j][rest_slot]
        reattach(survivor_id, other, other_slot)
        del leaves[removed_id], junctions[j], nbrs[removed_id], nbrs[j]

    remaining = sorted(leaves[n] for n in leaves)
    if len(remaining) != 2:
        raise TreeError(f"expected a terminal pair, got {remaining}")  # pragma: no cover
    return EliminationSequence(tuple(steps), (remaining[0], remaining[1]))


def balanced_clique_tree(depth: int) -> DeltaTree:
    """All-delta tree with 3 * 2**depth leaves; its semantics is a clique.

    A central junction carries three complete binary branches of the given
    depth.  Used for the snowflake-style radial drawings of large cliques.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    n_leaves = 3 * 2**depth
    leaves = {i: i for i in range(n_leaves)}
    junctions: dict[int, Junction] = {}
    edges = set()
    counter = [n_leaves]
    leaf_iter = iter(range(n_leaves))

    def build(levels):
        """Return (node id, slot) of a subtree root hanging downward."""
        if levels == 0:
            return next(leaf_iter), 0
        j = counter[0]
        counter[0] += 1
        junctions[j] = Junction(DELTA)
        for port, sub in ((1, build(levels - 1)), (2, build(levels - 1))):
            edges.add(_edge(j, port, *sub))
        return j, 0

    center = counter[0]
    counter[0] += 1
    junctions[center] = Junction(DELTA)
    for port in (0, 1, 2):
        edges.add(_edge(center, port, *build(depth)))
    return DeltaTree(leaves, junctions, edges)


def tree_to_text(t: DeltaTree) -> str:
    """Line-oriented serialization: leaf, junction, and edge lines."""
    lines = []
    for node in sorted(t.leaves):
        lines.append(f"leaf {node} vertex={t.leaves[node]}")
    for node in sorted(t.junctions):
        j = t.junctions[node]
        if j.kind == LAMBDA:
            lines.append(f"junction {node} kind=lambda head={j.head}")
        else:
            lines.append(f"junction {node} kind=delta")
    for (a, sa), (b, sb) in sorted(t.edges):
        lines.append(f"edge {a}:{sa} {b}:{sb}")
    return "\n".join(lines) + "\n"


def tree_from_text(text: str) -> DeltaTree:
    leaves = {}
    junctions = {}
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "leaf":
                node = int(parts[1])
                leaves[node] = int(parts[2].removeprefix("vertex="))
            elif parts[0] == "junction":
                node = int(parts[1])
                kind = parts[2].removeprefix("kind=")
                if kind == LAMBDA:
                    junctions[node] = Junction(LAMBDA, head=int(parts[3].removeprefix("head=")))
                else:
                    junctions[node] = Junction(DELTA)
            elif parts[0] == "edge":
                a, sa = parts[1].split(":")
                b, sb = parts[2].split(":")
                edges.add(_edge(int(a), int(sa), int(b), int(sb)))
            else:
                raise ValueError(f"unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise TreeError(f"line {lineno}: {exc}") from None
    return DeltaTree(leaves, junctions, edges)
