"""Weighted r-path ideals of weighted graphs."""

from __future__ import annotations

import enum
import math
from itertools import combinations
from typing import Callable, Union

from .graph import Path, WeightedGraph, enumerate_r_paths, induced_subgraph, is_path
from .monomial import Monomial, MonomialIdeal, ideal_sum


class Combiner(enum.Enum):
    """Symmetric rule combining the two path-edge weights at an interior vertex."""

    MAX = "max"
    MIN = "min"
    GCD = "gcd"
    LCM = "lcm"

    def __call__(self, a: int, b: int) -> int:
        return _FUNCS[self](a, b)


_FUNCS = {
    Combiner.MAX: max,
    Combiner.MIN: min,
    Combiner.GCD: math.gcd,
    Combiner.LCM: lambda a, b: a * b // math.gcd(a, b),
}

CombinerLike = Union[Combiner, str, Callable[[int, int], int]]


def as_combiner(f: CombinerLike) -> Callable[[int, int], int]:
    """Accept a :class:`Combiner`, its tag (``"max"`` ...), or any symmetric callable."""
    if isinstance(f, str):
        try:
            return Combiner(f.lower())
        except ValueError:
            raise ValueError(f"unknown combiner {f!r}; expected one of max, min, gcd, lcm") from None
    if callable(f):
        return f
    raise TypeError(f"not a combiner: {f!r}")


def path_exponents(g: WeightedGraph, f: CombinerLike, p: Path) -> list[int]:
    """Exponent of each vertex of ``p`` in its path monomial, in path order."""
    f = as_combiner(f)
    w = [g.weight(a, b) for a, b in zip(p, p[1:])]
    interior = [f(w[k - 1], w[k]) for k in range(1, len(p) - 1)]
    return [w[0], *interior, w[-1]]


def path_monomial(g: WeightedGraph, f: CombinerLike, p: Path) -> Monomial:
    p = tuple(p)
    if len(p) < 2 or not is_path(g, p):
        raise ValueError(f"{p} is not a path of the graph")
    return Monomial.from_dict(g.n, dict(zip(p, path_exponents(g, f, p))))


def path_monomials(g: WeightedGraph, f: CombinerLike, r: int) -> list[tuple[Path, Monomial]]:
    """Every r-path with its (possibly redundant) generator."""
    return [(p, path_monomial(g, f, p)) for p in enumerate_r_paths(g, r)]


def build_path_ideal(g: WeightedGraph, f: CombinerLike, r: int) -> MonomialIdeal:
    """The f-weighted r-path ideal of ``g`` in ``g.n`` variables, minimally generated."""
    return MonomialIdeal(g.n, tuple(m for _, m in path_monomials(g, f, r)))


def locality_check(g: WeightedGraph, f: CombinerLike, r: int) -> bool:
    """Compare the path ideal with the sum over induced (r+1)-vertex subgraphs."""
    total = MonomialIdeal(g.n)
    for s in combinations(g.sorted_vertices(), r + 1):
        total = ideal_sum(total, build_path_ideal(induced_subgraph(g, s), f, r))
    return total == build_path_ideal(g, f, r)
