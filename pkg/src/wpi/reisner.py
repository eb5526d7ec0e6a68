"""Cohen-Macaulay test for monomial ideals over the rationals via Reisner's criterion.

The ideal is polarized, its Stanley-Reisner complex is built, and every face
link is checked for vanishing reduced homology below its top dimension.
Homology ranks use exact integer elimination; there is no floating point.
A GF(2) pass screens links first: reducing an integer matrix mod 2 can only
lower its rank, so vanishing homology mod 2 implies vanishing over Q. Only
links that look nonzero mod 2 are recomputed exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from .monomial import MonomialIdeal, UnitIdealError, polarize

DEFAULT_SIZE_GUARD = 20


class SizeGuardError(ValueError):
    """The polarized ideal has more variables than the oracle will handle."""


def size_guard() -> int:
    raw = os.environ.get("WPI_SIZE_GUARD")
    if raw is None:
        return DEFAULT_SIZE_GUARD
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"WPI_SIZE_GUARD must be an integer, got {raw!r}") from None


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices ``1..nverts`` given by its facets."""

    nverts: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        fs = {frozenset(f) for f in self.facets}
        fs = [f for f in fs if not any(f < h for h in fs)]
        object.__setattr__(self, "facets", tuple(sorted(fs, key=lambda f: (len(f), sorted(f)))))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            _all_subsets(tuple(sorted(f)), out)
        return out


def _all_subsets(verts: tuple[int, ...], out: set) -> None:
    for mask in range(1 << len(verts)):
        out.add(frozenset(v for k, v in enumerate(verts) if mask >> k & 1))


def _independent_sets(nverts: int, edges: list[int]) -> list[int]:
    """All vertex subsets (bitmasks over 0..nverts-1) containing no hyperedge."""
    out = []

    def grow(k: int, mask: int) -> None:
        if k == nverts:
            out.append(mask)
            return
        grow(k + 1, mask)
        with_k = mask | (1 << k)
        # hyperedges are checked once their top vertex is decided
        if not any(e & with_k == e and e >> k == 1 for e in edges):
            grow(k + 1, with_k)

    grow(0, 0)
    return out


def stanley_reisner_complex(i: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside ``i``."""
    if not i.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    if i.is_unit():
        raise UnitIdealError("the unit ideal has no Stanley-Reisner complex")
    edges = [sum(1 << (v - 1) for v in m.support) for m in i.gens]
    faces = _independent_sets(i.nvars, edges)
    full = (1 << i.nvars) - 1
    face_set = set(faces)
    facets = [f for f in faces
              if not any((f | (1 << k)) in face_set for k in _bits(full & ~f))]
    return SimplicialComplex(i.nvars, tuple(frozenset(k + 1 for k in _bits(f)) for f in facets))


def _rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            p = pivots.get(col)
            if p is None:
                pivots[col] = row
                break
            a, b = p[col], row[col]
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - b * v
            row = {k: v for k, v in new.items() if v}
            if row:
                c = 0
                for v in row.values():
                    c = gcd(c, v)
                if c > 1:
                    row = {k: v // c for k, v in row.items()}
    return len(pivots)


def _rank_mod_2(rows: list[int]) -> int:
    """Rank over GF(2) of bitset rows; never exceeds the rank over Q."""
    basis: dict[int, int] = {}
    for x in rows:
        while x:
            top = x.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = x
                break
            x ^= b
    return len(basis)


def _submasks(m: int, out: set) -> None:
    sub = m
    while True:
        out.add(sub)
        if not sub:
            return
        sub = (sub - 1) & m


def _homology_from_faces(faces, top: int | None = None, exact: bool = True) -> list[int]:
    """Reduced homology ranks in dimensions -1..top of a face collection.

    ``faces`` are vertex bitmasks closed under taking subsets (0 included).
    With ``exact=False`` ranks are taken over GF(2), which gives upper bounds
    for the rational homology ranks.
    """
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    d = max(by_dim)
    if top is None:
        top = d
    index = {k: {f: n for n, f in enumerate(sorted(fs))} for k, fs in by_dim.items()}
    ranks = {}
    for k in range(0, min(top + 1, d) + 1):
        below = index[k - 1]
        if exact:
            rows = []
            for f in by_dim[k]:
                row = {}
                for j, v in enumerate(_bits(f)):
                    row[below[f ^ (1 << v)]] = -1 if j % 2 else 1
                rows.append(row)
            ranks[k] = _rank(rows)
        else:
            bitrows = []
            for f in by_dim[k]:
                row, x = 0, f
                while x:
                    low = x & -x
                    row |= 1 << below[f ^ low]
                    x ^= low
                bitrows.append(row)
            ranks[k] = _rank_mod_2(bitrows)
    out = []
    for k in range(-1, top + 1):
        fk = len(by_dim.get(k, ()))
        out.append(fk - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def _mask(face) -> int:
    return sum(1 << (v - 1) for v in face)


def reduced_homology_ranks(c: SimplicialComplex) -> list[int]:
    """Ranks of reduced homology over Q, listed for dimensions -1..dim c."""
    faces: set[int] = {0}
    for f in c.facets:
        _submasks(_mask(f), faces)
    return _homology_from_faces(faces)


def is_cohen_macaulay_complex(c: SimplicialComplex) -> bool:
    """Reisner: every link (the complex itself included) is acyclic below its dimension."""
    if not c.is_pure():
        return False  # a CM complex is pure
    facets = [_mask(f) for f in c.facets]
    faces: set[int] = {0}
    for h in facets:
        _submasks(h, faces)
    for face in sorted(faces, key=lambda f: (f.bit_count(), f)):
        star = [h for h in facets if h & face == face]
        lk_dim = star[0].bit_count() - face.bit_count() - 1
        if lk_dim <= 0:
            # a nonempty 0-dim complex has no homology below dimension 0
            continue
        common = star[0]
        for h in star:
            common &= h
        if common & ~face:
            continue  # the link is a cone
        link: set[int] = set()
        for h in star:
            _submasks(h & ~face, link)
        if any(_homology_from_faces(link, lk_dim - 1, exact=False)):
            if any(_homology_from_faces(link, lk_dim - 1)):
                return False
    return True


def is_cm_rational(i: MonomialIdeal) -> bool:
    """Cohen-Macaulayness of ``S/i`` over Q, decided on the polarization of ``i``."""
    if i.is_unit():
        raise UnitIdealError("the unit ideal is not a proper ideal")
    pol = polarize(i)
    guard = size_guard()
    if pol.ideal.nvars > guard:
        raise SizeGuardError(f"polarized ideal has {pol.ideal.nvars} variables; the guard is {guard}"
                             " (set WPI_SIZE_GUARD to raise it)")
    return is_cohen_macaulay_complex(stanley_reisner_complex(pol.ideal))
