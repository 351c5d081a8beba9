"""Simple undirected graphs: parsing, generation, and shortest-path distances.

Vertices are non-negative integer labels.  Graphs are immutable after
construction; every operation here returns a new value.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field


INF = math.inf

PENDANT = "pendant"
TRUE_TWIN = "true_twin"
FALSE_TWIN = "false_twin"

EXTENSION_KINDS = (PENDANT, TRUE_TWIN, FALSE_TWIN)


class GraphParseError(ValueError):
    """Edge-list text that cannot be turned into a simple graph."""


class Graph:
    """Immutable simple undirected graph over integer vertex labels."""

    __slots__ = ("_adj", "_vertices")

    def __init__(self, vertices=(), edges=()):
        adj = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            adj[u].add(v)
            adj[v].add(u)
        for v in adj:
            if v < 0:
                raise ValueError(f"negative vertex label {v}")
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self._vertices = tuple(sorted(self._adj))

    @property
    def vertices(self):
        return self._vertices

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v."""
        return [
            (u, v)
            for u in self._vertices
            for v in sorted(self._adj[u])
            if u < v
        ]

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def adjacency(self):
        """Mutable copy of the adjacency map (vertex -> set of neighbors)."""
        return {v: set(nbrs) for v, nbrs in self._adj.items()}

    def is_connected(self):
        if not self._vertices:
            return False
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    def induced(self, subset):
        """Subgraph induced by the given vertex subset."""
        keep = set(subset)
        missing = keep - set(self._adj)
        if missing:
            raise ValueError(f"unknown vertices: {sorted(missing)}")
        return Graph(
            keep,
            (
                (u, v)
                for u in keep
                for v in self._adj[u]
                if v in keep and u < v
            ),
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, tuple(self._adj[v] for v in self._vertices)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_equals(a: Graph, b: Graph) -> bool:
    """Label-respecting equality: same vertex set, same adjacency."""
    return a == b


def parse_graph(text: str) -> Graph:
    """Parse whitespace-separated edge-list text.

    Each non-comment line is either `u v` (an edge) or a lone `u`
    (an isolated vertex declaration).  Duplicate edges collapse silently;
    lines starting with `#` are ignored.
    """
    vertices = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise GraphParseError(f"line {lineno}: expected 1 or 2 labels, got {len(tokens)}")
        labels = []
        for tok in tokens:
            try:
                label = int(tok)
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed token {tok!r}") from None
            if label < 0:
                raise GraphParseError(f"line {lineno}: negative label {label}")
            labels.append(label)
        if len(labels) == 1:
            vertices.add(labels[0])
        else:
            u, v = labels
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
            vertices.update(labels)
            edges.append((u, v))
    return Graph(vertices, edges)


def graph_to_edge_text(g: Graph) -> str:
    """Inverse of parse_graph: one `u v` line per edge, lone lines for isolated vertices."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines.extend(str(v) for v in g.vertices if g.degree(v) == 0)
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_dict(g: Graph) -> dict:
    """Structured export for machine consumption: `vertices` and `edges` arrays."""
    return {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges()],
    }


@dataclass(frozen=True)
class ExtensionStep:
    """One vertex added to a growing graph: a pendant hang or a twin split."""

    kind: str
    new_vertex: int
    anchor_vertex: int

    def __post_init__(self):
        if self.kind not in EXTENSION_KINDS:
            raise ValueError(f"unknown extension kind {self.kind!r}")


@dataclass(frozen=True)
class ExtensionTrace:
    """A build recipe: start from a single edge, add one vertex per step."""

    base: tuple[int, int]
    steps: tuple[ExtensionStep, ...] = field(default=())


def replay_trace(trace: ExtensionTrace) -> Graph:
    """Rebuild the graph described by an extension trace."""
    u, v = trace.base
    adj = {u: {v}, v: {u}}
    for step in trace.steps:
        a, x = step.anchor_vertex, step.new_vertex
        if a not in adj:
            raise ValueError(f"anchor {a} does not exist yet")
        if x in adj:
            raise ValueError(f"new vertex {x} already exists")
        if step.kind == PENDANT:
            nbrs = {a}
        elif step.kind == TRUE_TWIN:
            nbrs = set(adj[a]) | {a}
        else:
            nbrs = set(adj[a])
        adj[x] = nbrs
        for w in nbrs:
            adj[w].add(x)
    return Graph(adj, ((a, b) for a in adj for b in adj[a] if a < b))


def gen_dh_random(n: int, seed: int, weights=(1 / 3, 1 / 3, 1 / 3)):
    """Random distance-hereditary graph on vertices 0..n-1, plus its build trace.

    Grown from a single edge by seeded one-vertex extensions; the anchor is
    chosen uniformly among existing vertices, the step kind by `weights`
    (pendant, true twin, false twin).  Deterministic per (n, seed, weights).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    total = sum(weights)
    if len(weights) != 3 or not math.isclose(total, 1.0, rel_tol=1e-9):
        raise ValueError(f"weights must be three probabilities summing to 1, got {weights}")
    rng = random.Random(seed)
    steps = []
    adj = {0: {1}, 1: {0}}
    for x in range(2, n):
        anchor = rng.choice(range(x))
        kind = rng.choices(EXTENSION_KINDS, weights=weights)[0]
        steps.append(ExtensionStep(kind, x, anchor))
        if kind == PENDANT:
            nbrs = {anchor}
        elif kind == TRUE_TWIN:
            nbrs = set(adj[anchor]) | {anchor}
        else:
            nbrs = set(adj[anchor])
        adj[x] = set(nbrs)
        for w in nbrs:
            adj[w].add(x)
    trace = ExtensionTrace((0, 1), tuple(steps))
    g = Graph(adj, ((a, b) for a in adj for b in adj[a] if a < b))
    return g, trace


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style random graph, each pair kept with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(range(n), edges)


def distances_bfs(g: Graph) -> dict:
    """All-pairs hop counts: d[u][v], with math.inf across components."""
    dist = {}
    for src in g.vertices:
        d = {v: INF for v in g.vertices}
        d[src] = 0
        queue = [src]
        while queue:
            nxt = []
            for u in queue:
                for w in g.neighbors(u):
                    if d[w] is INF:
                        d[w] = d[u] + 1
                        nxt.append(w)
            queue = nxt
        dist[src] = d
    return dist
