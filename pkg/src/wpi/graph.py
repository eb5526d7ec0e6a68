"""Weighted simple graphs, r-path enumeration, pruning and suspension detection.

Vertices are 1-based integer ids that survive pruning and induction, so a
subgraph keeps the labels of its host.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

Edge = tuple[int, int]
Path = tuple[int, ...]


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class WeightedGraph:
    """A finite simple graph with positive integer edge weights.

    ``vertices`` defaults to ``1..n``; induced subgraphs carry an explicit
    vertex set so that original ids are kept.
    """

    n: int
    edges: Mapping[Edge, int] = field(default_factory=dict)
    vertices: frozenset[int] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        for v in verts:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")
        norm: dict[Edge, int] = {}
        for (i, j), w in dict(self.edges).items():
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i not in verts or j not in verts:
                raise ValueError(f"edge {{{i},{j}}} has an endpoint outside the vertex set")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"edge {{{i},{j}}} has non-positive weight {w!r}")
            e = _edge(i, j)
            if e in norm:
                raise ValueError(f"duplicate edge {{{i},{j}}}")
            norm[e] = w
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", dict(sorted(norm.items())))
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for i, j in norm:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "WeightedGraph":
        """Build from ``(i, j, w)`` triples."""
        d: dict[Edge, int] = {}
        for i, j, w in edges:
            e = _edge(i, j)
            if e in d:
                raise ValueError(f"duplicate edge {{{i},{j}}}")
            d[e] = w
        return cls(n, d)

    def __hash__(self):
        return hash((self.n, self.vertices, tuple(self.edges.items())))

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.n, self.vertices, self.edges) == (other.n, other.vertices, other.edges)

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, edges={self.edge_list()!r})"

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def weight(self, i: int, j: int) -> int:
        return self.edges[_edge(i, j)]

    def has_edge(self, i: int, j: int) -> bool:
        return _edge(i, j) in self.edges

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [(i, j, w) for (i, j), w in self.edges.items()]

    def check_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise ValueError(f"vertex {v} is not in the graph")

    def with_weights(self, weight: int) -> "WeightedGraph":
        """Same underlying graph with every edge weight replaced by ``weight``."""
        return WeightedGraph(self.n, {e: weight for e in self.edges}, self.vertices)


def canonical_path(p: Iterable[int]) -> Path:
    """Orient a vertex sequence so that the first id is smaller than the last."""
    p = tuple(p)
    return p if p[0] <= p[-1] else p[::-1]


def is_path(g: WeightedGraph, p: Path) -> bool:
    return (len(set(p)) == len(p) and all(v in g.vertices for v in p)
            and all(g.has_edge(a, b) for a, b in zip(p, p[1:])))


def enumerate_r_paths(g: WeightedGraph, r: int) -> list[Path]:
    """All r-paths of ``g``, one per reversal class, in canonical orientation.

    The result is sorted lexicographically by vertex sequence.
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    found: set[Path] = set()
    stack: list[int] = []
    on_path: set[int] = set()

    def extend(v: int) -> None:
        stack.append(v)
        on_path.add(v)
        if len(stack) == r + 1:
            # each path is reached from both ends; keep the canonical one
            if stack[0] < stack[-1]:
                found.add(tuple(stack))
        else:
            for u in g.neighbors(v):
                if u not in on_path:
                    extend(u)
        stack.pop()
        on_path.discard(v)

    if r < len(g.vertices):
        for v in g.sorted_vertices():
            extend(v)
    return sorted(found)


def induced_subgraph(g: WeightedGraph, s: Iterable[int]) -> WeightedGraph:
    s = frozenset(s)
    for v in s:
        g.check_vertex(v)
    edges = {(i, j): w for (i, j), w in g.edges.items() if i in s and j in s}
    return WeightedGraph(g.n, edges, s)


def is_r_pathless_leaf(g: WeightedGraph, v: int, r: int) -> bool:
    g.check_vertex(v)
    if g.degree(v) != 1:
        return False
    return not any(v in p for p in enumerate_r_paths(g, r))


def prune_pathless_leaves(g: WeightedGraph, r: int) -> tuple[WeightedGraph, list[int]]:
    """Remove r-pathless leaves, lowest id first, until none remain.

    Returns the pruned graph (original ids kept) and the removal order.
    """
    removed = []
    while True:
        on_paths = {v for p in enumerate_r_paths(g, r) for v in p}
        leaf = next((v for v in g.sorted_vertices()
                     if g.degree(v) == 1 and v not in on_paths), None)
        if leaf is None:
            return g, removed
        removed.append(leaf)
        g = induced_subgraph(g, g.vertices - {leaf})


@dataclass(frozen=True)
class SuspensionWitness:
    """Bases ``v_1..v_beta`` and, per base, its whisker ``y_1..y_r`` listed outward."""

    bases: tuple[int, ...]
    whiskers: tuple[tuple[int, ...], ...]

    def pairs(self):
        return zip(self.bases, self.whiskers)

    def check(self, g: WeightedGraph, r: int) -> bool:
        """Verify the structural conditions of an r-path suspension against ``g``."""
        seen: list[int] = list(self.bases)
        for base, ys in self.pairs():
            if len(ys) != r:
                return False
            seen.extend(ys)
            walk = (base, *ys)
            if not all(g.has_edge(a, b) for a, b in zip(walk, walk[1:])):
                return False
            if any(g.degree(y) != 2 for y in ys[:-1]) or g.degree(ys[-1]) != 1:
                return False
        return len(seen) == len(set(seen)) and set(seen) == set(g.vertices)


def _whisker_from_leaf(g: WeightedGraph, leaf: int, r: int):
    """Walk ``r`` edges inward from ``leaf`` through degree-2 vertices.

    Returns ``(base, (y_1, ..., y_r))`` or ``None`` when the walk is blocked.
    """
    walk = [leaf]
    prev, cur = None, leaf
    for step in range(r):
        if step > 0 and g.degree(cur) != 2:
            return None
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        walk.append(cur)
    if len(set(walk)) != len(walk):
        return None
    return cur, tuple(reversed(walk[:-1]))


def detect_r_path_suspension(g: WeightedGraph, r: int) -> SuspensionWitness | None:
    """Find bases and whiskers exhibiting ``g`` as an r-path suspension.

    Exact-cover backtracking over the candidate whiskers, one per leaf, in
    increasing leaf order. Returns ``None`` if no decomposition exists.
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    verts = g.sorted_vertices()
    if not verts or len(verts) % (r + 1):
        return None
    candidates = []
    for leaf in verts:
        if g.degree(leaf) == 1:
            c = _whisker_from_leaf(g, leaf, r)
            if c is not None:
                candidates.append(c)
    by_vertex: dict[int, list[tuple[int, tuple[int, ...]]]] = {v: [] for v in verts}
    for base, ys in candidates:
        for v in (base, *ys):
            by_vertex[v].append((base, ys))

    chosen: list[tuple[int, tuple[int, ...]]] = []
    covered: set[int] = set()

    def search() -> bool:
        todo = next((v for v in verts if v not in covered), None)
        if todo is None:
            return True
        for base, ys in by_vertex[todo]:
            block = {base, *ys}
            if covered.isdisjoint(block):
                chosen.append((base, ys))
                covered.update(block)
                if search():
                    return True
                chosen.pop()
                covered.difference_update(block)
        return False

    if not search():
        return None
    chosen.sort()
    return SuspensionWitness(tuple(b for b, _ in chosen), tuple(ys for _, ys in chosen))


def is_connected(g: WeightedGraph) -> bool:
    verts = g.sorted_vertices()
    if not verts:
        return True
    seen = {verts[0]}
    todo = [verts[0]]
    while todo:
        v = todo.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(verts)


def classify(g: WeightedGraph) -> str:
    """Return ``"tree"``, ``"complete"`` or ``"other"``; trees win ties (n <= 2)."""
    k = len(g.vertices)
    if k >= 1 and len(g.edges) == k - 1 and is_connected(g):
        return "tree"
    if len(g.edges) == k * (k - 1) // 2:
        return "complete"
    return "other"
