"""Weighted r-path vertex covers and their link to m-irreducible components.

A cover is a map ``{vertex: weight}``. Minimal covers are read off the
irredundant decomposition of the path ideal; :func:`is_cover` and
:func:`reduce_to_minimal` work directly on the graph.
"""

from __future__ import annotations

from typing import Mapping

from .graph import WeightedGraph, enumerate_r_paths
from .monomial import MIrredComponent, m_irreducible_decompose
from .path_ideal import CombinerLike, build_path_ideal, path_exponents, path_monomials

Cover = dict[int, int]


def _validate(g: WeightedGraph, c: Mapping[int, int]) -> None:
    for v, s in c.items():
        g.check_vertex(v)
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"cover weight of vertex {v} must be a positive integer, got {s!r}")


def _weighted_paths(g: WeightedGraph, f: CombinerLike, r: int):
    return [dict(zip(p, path_exponents(g, f, p))) for p in enumerate_r_paths(g, r)]


def _covers_all(paths, c: Mapping[int, int]) -> bool:
    return all(any(v in c and c[v] <= e for v, e in p.items()) for p in paths)


def is_cover(g: WeightedGraph, f: CombinerLike, r: int, c: Mapping[int, int]) -> bool:
    """Does every r-path contain a vertex of ``c`` whose weight is at most its path exponent?"""
    _validate(g, c)
    return _covers_all(_weighted_paths(g, f, r), c)


def cover_to_component(c: Mapping[int, int]) -> MIrredComponent:
    return MIrredComponent.from_dict(c)


def component_to_cover(p: MIrredComponent) -> Cover:
    return p.as_dict()


def cover_sort_key(c: Mapping[int, int]):
    items = sorted(c.items())
    return (len(items), tuple(v for v, _ in items), tuple(s for _, s in items))


def minimal_covers(g: WeightedGraph, f: CombinerLike, r: int) -> list[Cover]:
    """All minimal f-weighted r-path vertex covers, in canonical order."""
    comps = m_irreducible_decompose(build_path_ideal(g, f, r))
    return sorted((component_to_cover(p) for p in comps), key=cover_sort_key)


def candidate_weights(g: WeightedGraph, f: CombinerLike, r: int) -> dict[int, list[int]]:
    """Per vertex, the sorted distinct exponents it receives over all r-paths."""
    out: dict[int, set[int]] = {v: set() for v in g.vertices}
    for _, m in path_monomials(g, f, r):
        for v, e in m.as_dict().items():
            out[v].add(e)
    return {v: sorted(es) for v, es in out.items()}


def reduce_to_minimal(g: WeightedGraph, f: CombinerLike, r: int,
                      c: Mapping[int, int]) -> Cover:
    """Shrink a cover to a minimal one below it.

    Removable vertices are dropped first, then each remaining weight is raised
    as far as the cover allows; both passes go in ascending vertex order.
    """
    _validate(g, c)
    paths = _weighted_paths(g, f, r)
    if not _covers_all(paths, c):
        raise ValueError("input is not a weighted r-path vertex cover")
    cover = dict(sorted(c.items()))
    for v in list(cover):
        trial = {u: s for u, s in cover.items() if u != v}
        if _covers_all(paths, trial):
            cover = trial
    cands = candidate_weights(g, f, r)
    for v in list(cover):
        # beyond the largest exponent of X_v the vertex covers nothing
        for s in reversed(cands[v]):
            if s <= cover[v]:
                break
            if _covers_all(paths, {**cover, v: s}):
                cover[v] = s
                break
    return cover


def is_unmixed(g: WeightedGraph, f: CombinerLike, r: int) -> bool:
    return len({len(c) for c in minimal_covers(g, f, r)}) == 1
