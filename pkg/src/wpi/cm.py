"""Combinatorial Cohen-Macaulay decisions for max-weighted path ideals.

Covered cases: trees for every r, complete graphs for r = 2. Anything else
raises :class:`NoCharacterizationError` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .graph import (
    SuspensionWitness,
    WeightedGraph,
    classify,
    detect_r_path_suspension,
    enumerate_r_paths,
    prune_pathless_leaves,
)


class NoCharacterizationError(ValueError):
    """No combinatorial CM criterion is available for this graph and r."""


@dataclass(frozen=True)
class CmVerdict:
    """Outcome of a CM decision plus the evidence behind it.

    ``kind`` is one of ``trivial-no-paths``, ``suspension``, ``no-suspension``,
    ``weight-inequality-violated``, ``clique-triples-ok``, ``failing-3-clique``.
    """

    is_cm: bool
    kind: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"cohen_macaulay": self.is_cm, "witness": {"kind": self.kind, **self.detail}}

    def describe(self) -> str:
        head = "Cohen-Macaulay" if self.is_cm else "not Cohen-Macaulay"
        d = self.detail
        if self.kind == "failing-3-clique":
            return f"{head}; witness triple ({','.join(map(str, d['triple']))})"
        if self.kind == "weight-inequality-violated":
            i, j = d["edge"]
            return f"{head}; base edge ({i},{j}) violates the whisker weight inequality"
        if self.kind == "no-suspension":
            return f"{head}; pruned graph is not an r-path suspension"
        if self.kind == "trivial-no-paths":
            return f"{head}; no r-paths after pruning"
        if self.kind == "suspension":
            return f"{head}; suspension over bases ({','.join(map(str, d['bases']))})"
        return f"{head}; every induced 3-clique passes"


def clique3_cm(a: int, b: int, c: int) -> bool:
    """Triangle with edge weights a, b, c: CM iff the two smallest weights agree."""
    if min(a, b, c) < 1:
        raise ValueError("weights must be positive")
    a, b, c = sorted((a, b, c))
    return a == b


def _suspension_detail(w: SuspensionWitness) -> dict:
    return {"bases": list(w.bases), "whiskers": [list(ys) for ys in w.whiskers]}


def cm_tree(g: WeightedGraph, r: int) -> CmVerdict:
    """Decide CM for a weighted tree by pruning and suspension structure."""
    if classify(g) != "tree":
        raise ValueError("cm_tree needs a tree")
    h, removed = prune_pathless_leaves(g, r)
    if not enumerate_r_paths(h, r):
        return CmVerdict(True, "trivial-no-paths", {"pruned": removed})
    w = detect_r_path_suspension(h, r)
    if w is None:
        return CmVerdict(False, "no-suspension", {"pruned": removed})
    detail = {"pruned": removed, **_suspension_detail(w)}
    first = {base: ys[0] for base, ys in w.pairs()}
    for i, j in combinations(w.bases, 2):
        if not h.has_edge(i, j):
            continue
        bound = min(h.weight(i, first[i]), h.weight(j, first[j]))
        if h.weight(i, j) > bound:
            return CmVerdict(False, "weight-inequality-violated",
                             {**detail, "edge": [i, j], "weight": h.weight(i, j), "bound": bound})
    return CmVerdict(True, "suspension", detail)


def _check_clique(g: WeightedGraph) -> None:
    if classify(g) != "complete" or len(g.vertices) < 3:
        raise ValueError("need a complete graph on at least 3 vertices")


def _triangles(g: WeightedGraph):
    for t in combinations(g.sorted_vertices(), 3):
        i, j, k = t
        yield t, (g.weight(i, j), g.weight(j, k), g.weight(i, k))


def cm_clique_r2(g: WeightedGraph) -> CmVerdict:
    """CM for the 2-path ideal of a weighted clique: every induced triangle must be CM."""
    _check_clique(g)
    for t, ws in _triangles(g):
        if not clique3_cm(*ws):
            return CmVerdict(False, "failing-3-clique", {"triple": list(t), "weights": list(ws)})
    return CmVerdict(True, "clique-triples-ok")


def clique_mixedness_shortcut(g: WeightedGraph) -> tuple[int, int, int] | None:
    """A triangle with three distinct weights, which forces the 2-path ideal to be mixed."""
    _check_clique(g)
    for t, ws in _triangles(g):
        if len(set(ws)) == 3:
            return t
    return None


def cm_auto(g: WeightedGraph, r: int) -> CmVerdict:
    kind = classify(g)
    if kind == "tree":
        return cm_tree(g, r)
    if kind == "complete" and r == 2 and len(g.vertices) >= 3:
        return cm_clique_r2(g)
    raise NoCharacterizationError(
        f"no characterization available for a {kind} graph with r={r}"
        " (supported: trees for any r, complete graphs for r=2)")
