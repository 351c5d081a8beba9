"""Distance-hereditary recognition by pendant/twin elimination.

A connected graph is reducible to a single edge by repeatedly deleting a
degree-1 vertex or identifying a twin pair (two vertices with the same
neighborhood, adjacent or not).  `eliminate` performs that reduction with a
fixed deterministic order; `is_distance_hereditary_oracle` is the independent
brute-force check used to validate it.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    ExtensionTrace,
    PENDANT,
    TRUE_TWIN,
    distances_bfs,
    INF,
)

PENDANT_CUT = "pendant_cut"
TRUE_TWIN_MERGE = "true_twin_merge"
FALSE_TWIN_MERGE = "false_twin_merge"

STEP_KINDS = (PENDANT_CUT, TRUE_TWIN_MERGE, FALSE_TWIN_MERGE)

ORACLE_LIMIT = 14


class NotDistanceHereditary(ValueError):
    """The input graph cannot be reduced to a single edge."""


class Disconnected(ValueError):
    """Recognition requires a connected graph."""


class TooSmall(ValueError):
    """Fewer than two vertices."""


class TooLarge(ValueError):
    """Brute-force guard exceeded."""


class SequenceError(ValueError):
    """A structurally inconsistent elimination sequence."""


@dataclass(frozen=True)
class EliminationStep:
    kind: str
    removed: int
    survivor: int

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")


@dataclass(frozen=True)
class EliminationSequence:
    steps: tuple[EliminationStep, ...]
    terminal_pair: tuple[int, int]


def eliminate(g: Graph) -> EliminationSequence:
    """Reduce g to a single edge, recording the removal order.

    Deterministic: vertices are considered in ascending label order; at a
    vertex a pendant cut is preferred over a twin merge, and a twin merge
    keeps the smaller label as survivor.  Raises NotDistanceHereditary when
    a residual graph with more than two vertices has no pendant and no twins.
    """
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    if not g.is_connected():
        raise Disconnected("graph is not connected")

    adj = g.adjacency()
    # Neighborhood fingerprints: random 128-bit tokens summed over neighbors.
    # Bucket collisions are verified against the actual adjacency sets.
    token_rng = random.Random(0x5EED_7EA5)
    token = {v: token_rng.getrandbits(128) for v in adj}
    open_h = {v: sum(token[w] for w in adj[v]) for v in adj}

    open_buckets: dict[int, set[int]] = {}
    closed_buckets: dict[int, set[int]] = {}

    def enroll(v):
        open_buckets.setdefault(open_h[v], set()).add(v)
        closed_buckets.setdefault(open_h[v] + token[v], set()).add(v)

    def withdraw(v):
        for buckets, key in (
            (open_buckets, open_h[v]),
            (closed_buckets, open_h[v] + token[v]),
        ):
            members = buckets[key]
            members.discard(v)
            if not members:
                del buckets[key]

    for v in adj:
        enroll(v)

    heap = list(adj)
    heapq.heapify(heap)

    def push(v):
        if v in adj:
            heapq.heappush(heap, v)

    def twin_partner(v):
        """Smallest verified twin of v, with the merge kind, or None."""
        best = None
        for buckets, key, kind in (
            (closed_buckets, open_h[v] + token[v], TRUE_TWIN_MERGE),
            (open_buckets, open_h[v], FALSE_TWIN_MERGE),
        ):
            for w in sorted(buckets.get(key, ())):
                if w == v:
                    continue
                if kind == TRUE_TWIN_MERGE:
                    ok = w in adj[v] and adj[v] - {w} == adj[w] - {v}
                else:
                    ok = w not in adj[v] and adj[v] == adj[w]
                if ok:
                    if best is None or w < best[0]:
                        best = (w, kind)
                    break
        return best

    def remove_vertex(x):
        withdraw(x)
        for w in adj[x]:
            withdraw(w)
            adj[w].discard(x)
            open_h[w] -= token[x]
            enroll(w)
            # Bucket-mates that just gained a partner become actionable.
            for buckets, key in (
                (open_buckets, open_h[w]),
                (closed_buckets, open_h[w] + token[w]),
            ):
                members = buckets[key]
                if len(members) == 2:
                    for m in members:
                        push(m)
            push(w)
        del adj[x], open_h[x]

    steps = []
    while len(adj) > 2:
        acted = False
        while heap:
            u = heapq.heappop(heap)
            if u not in adj:
                continue
            if len(adj[u]) == 1:
                survivor = next(iter(adj[u]))
                remove_vertex(u)
                steps.append(EliminationStep(PENDANT_CUT, u, survivor))
                push(survivor)
                acted = True
                break
            found = twin_partner(u)
            if found is not None:
                partner, kind = found
                survivor, removed = min(u, partner), max(u, partner)
                remove_vertex(removed)
                steps.append(EliminationStep(kind, removed, survivor))
                push(survivor)
                acted = True
                break
        if not acted:
            # Heap exhausted: rescan once in case of a missed reinsertion,
            # then report a constructive failure certificate.
            for v in sorted(adj):
                if len(adj[v]) == 1 or twin_partner(v) is not None:
                    push(v)
                    acted = True
                    break
            if not acted:
                raise NotDistanceHereditary(
                    f"stuck with {len(adj)} vertices: no pendant and no twin pair"
                )

    u, v = sorted(adj)
    if v not in adj[u]:
        raise AssertionError("residual pair is not an edge")  # pragma: no cover
    return EliminationSequence(tuple(steps), (u, v))


def is_distance_hereditary_oracle(g: Graph, limit: int = ORACLE_LIMIT) -> bool:
    """Brute-force check: every connected induced subgraph preserves distances.

    Enumerates all vertex subsets, so it is restricted to small graphs.
    """
    if g.n > limit:
        raise TooLarge(f"oracle limited to {limit} vertices, got {g.n}")
    if g.n == 0 or not g.is_connected():
        return False
    verts = list(g.vertices)
    full = distances_bfs(g)
    for size in range(2, g.n + 1):
        for subset in combinations(verts, size):
            sub = g.induced(subset)
            if not sub.is_connected():
                continue
            d = distances_bfs(sub)
            for a, b in combinations(subset, 2):
                if d[a][b] != full[a][b]:
                    return False
    return True


def apply_sequence_forward(seq: EliminationSequence) -> Graph:
    """Replay an elimination sequence backwards as one-vertex extensions.

    Starting from the terminal edge, each step reintroduces its removed
    vertex: a pendant cut becomes a pendant attachment, a twin merge a twin
    split.  For seq = eliminate(g) the result equals g.
    """
    u, v = seq.terminal_pair
    if u == v:
        raise SequenceError("terminal pair must be two distinct vertices")
    adj = {u: {v}, v: {u}}
    for step in reversed(seq.steps):
        a, x = step.survivor, step.removed
        if a not in adj:
            raise SequenceError(f"survivor {a} does not exist when reinserting {x}")
        if x in adj:
            raise SequenceError(f"removed vertex {x} already present")
        if step.kind == PENDANT_CUT:
            nbrs = {a}
        elif step.kind == TRUE_TWIN_MERGE:
            nbrs = set(adj[a]) | {a}
        else:
            nbrs = set(adj[a])
        adj[x] = nbrs
        for w in nbrs:
            adj[w].add(x)
    return Graph(adj, ((a, b) for a in adj for b in adj[a] if a < b))


def trace_to_sequence(trace: ExtensionTrace) -> EliminationSequence:
    """Invert a build trace: undoing the extensions last-first is an elimination.

    Equivalent to eliminate(replay_trace(trace)) up to step order, but O(n).
    """
    steps = []
    for step in reversed(trace.steps):
        if step.kind == PENDANT:
            kind = PENDANT_CUT
        elif step.kind == TRUE_TWIN:
            kind = TRUE_TWIN_MERGE
        else:
            kind = FALSE_TWIN_MERGE
        steps.append(EliminationStep(kind, step.new_vertex, step.anchor_vertex))
    u, v = sorted(trace.base)
    return EliminationSequence(tuple(steps), (u, v))


def max_dh_subgraph_bruteforce(g: Graph, k: int, limit: int = ORACLE_LIMIT):
    """Largest vertex subset (>= k) inducing a distance-hereditary subgraph.

    Exhaustive: subsets are tried in decreasing size, lexicographically
    within a size, and the first hit is returned.  None if no subset of
    size >= k qualifies.
    """
    if g.n > limit:
        raise TooLarge(f"brute force limited to {limit} vertices, got {g.n}")
    verts = list(g.vertices)
    for size in range(g.n, max(k, 1) - 1, -1):
        for subset in combinations(verts, size):
            sub = g.induced(subset)
            if is_distance_hereditary_oracle(sub, limit=limit):
                return set(subset)
    return None


def sequence_to_text(seq: EliminationSequence) -> str:
    """Line-oriented form: `<removed> merged into <survivor> true|false` or
    `<removed> cut from <survivor>`, ending with the terminal `K2:` line."""
    lines = []
    for step in seq.steps:
        if step.kind == PENDANT_CUT:
            lines.append(f"{step.removed} cut from {step.survivor}")
        else:
            flavor = "true" if step.kind == TRUE_TWIN_MERGE else "false"
            lines.append(f"{step.removed} merged into {step.survivor} {flavor}")
    u, v = seq.terminal_pair
    lines.append(f"K2: {u} {v}")
    return "\n".join(lines) + "\n"
