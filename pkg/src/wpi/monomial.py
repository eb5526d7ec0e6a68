"""Exact monomial-ideal arithmetic over an indexed variable set X1..Xn.

Everything here is coefficient-free: monomials are exponent vectors and
ideals are minimal monomial generating sets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping

_TERM = re.compile(r"^X(\d+)(?:\^(\d+))?$")


class ContextError(ValueError):
    """Raised when objects over different variable universes are combined."""


class UnitIdealError(ValueError):
    """Raised when an operation needs a proper ideal but got the unit ideal."""


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """A monomial in ``nvars`` variables stored as a dense exponent tuple.

    Variables are 1-based: ``exps[i - 1]`` is the exponent of ``X_i``.
    """

    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exps)
        if any(not isinstance(e, int) or e < 0 for e in exps):
            raise ValueError(f"exponents must be non-negative integers: {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_dict(cls, nvars: int, exps: Mapping[int, int]) -> "Monomial":
        v = [0] * nvars
        for i, e in exps.items():
            if not 1 <= i <= nvars:
                raise ContextError(f"variable X{i} outside the universe X1..X{nvars}")
            v[i - 1] = e
        return cls(tuple(v))

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def parse(cls, text: str, nvars: int) -> "Monomial":
        """Parse ``"X3^2*X4"``; ``"1"`` is the unit monomial."""
        text = text.replace(" ", "")
        exps: dict[int, int] = {}
        if text != "1":
            for term in text.split("*"):
                m = _TERM.match(term)
                if not m:
                    raise ValueError(f"cannot parse monomial term {term!r}")
                i, e = int(m.group(1)), int(m.group(2) or 1)
                exps[i] = exps.get(i, 0) + e
        return cls.from_dict(nvars, exps)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def as_dict(self) -> dict[int, int]:
        return {i + 1: e for i, e in enumerate(self.exps) if e}

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def _check(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise ContextError(f"monomials over {self.nvars} and {other.nvars} variables")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; ``other`` must divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __lt__(self, other: "Monomial") -> bool:
        return self.exps < other.exps

    def to_text(self, names: list[str] | None = None) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if e:
                name = names[i] if names else f"X{i + 1}"
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        return {"exps": {str(i): e for i, e in self.as_dict().items()}}

    def __str__(self):
        return self.to_text()


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return a.gcd(b)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sorting by degree means a divisor is always seen before its multiples
    keep: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (m.degree(), m.exps)):
        if not any(k.divides(m) for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its unique minimal generating set.

    The empty generator set is the zero ideal. Build through :func:`minimalize`
    or the constructor, which minimalizes on the way in.
    """

    nvars: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        gens = list(self.gens)
        for m in gens:
            if m.nvars != self.nvars:
                raise ContextError(f"generator {m} is not over {self.nvars} variables")
        object.__setattr__(self, "gens", _minimal(gens))

    @classmethod
    def parse(cls, texts: Iterable[str], nvars: int) -> "MonomialIdeal":
        return cls(nvars, tuple(Monomial.parse(t, nvars) for t in texts))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(m.is_one() for m in self.gens)

    def is_squarefree(self) -> bool:
        return all(m.is_squarefree() for m in self.gens)

    def _check(self, other) -> None:
        if other.nvars != self.nvars:
            raise ContextError(f"ideals over {self.nvars} and {other.nvars} variables")

    def contains(self, m: Monomial) -> bool:
        if m.nvars != self.nvars:
            raise ContextError(f"monomial over {m.nvars} variables, ideal over {self.nvars}")
        return any(g.divides(m) for g in self.gens)

    __contains__ = contains

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.contains(m) for m in other.gens)

    def to_text(self) -> list[str]:
        return [m.to_text() for m in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.to_text()) + ")"

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max((m.exps[i] for m in self.gens), default=0) for i in range(self.nvars))


def minimalize(gens: Iterable[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """Drop every monomial divisible by another one in ``gens``."""
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for an empty generator set")
        nvars = gens[0].nvars
    return MonomialIdeal(nvars, tuple(gens))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    i._check(j)
    return MonomialIdeal(i.nvars, i.gens + j.gens)


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    i._check(j)
    return MonomialIdeal(i.nvars, tuple(a.lcm(b) for a in i.gens for b in j.gens))


def colon(i: MonomialIdeal, h: Monomial) -> MonomialIdeal:
    """The colon ideal ``(i : h)``, generated by ``g / gcd(g, h)``."""
    if h.nvars != i.nvars:
        raise ContextError(f"monomial over {h.nvars} variables, ideal over {i.nvars}")
    return MonomialIdeal(i.nvars, tuple(g / g.gcd(h) for g in i.gens))


@total_ordering
@dataclass(frozen=True)
class MIrredComponent:
    """An m-irreducible ideal ``(X_i^{a_i} : i in support)``.

    ``powers`` is a sorted tuple of ``(variable, exponent)`` pairs; empty means
    the zero ideal.
    """

    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        powers = tuple(sorted(dict(self.powers).items()))
        if len(powers) != len(self.powers):
            raise ValueError(f"repeated variable in {self.powers}")
        for i, a in powers:
            if i < 1 or a < 1:
                raise ValueError(f"invalid pure power X{i}^{a}")
        object.__setattr__(self, "powers", powers)

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "MIrredComponent":
        return cls(tuple(d.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.powers)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.powers)

    def __len__(self):
        return len(self.powers)

    def contains(self, m: Monomial) -> bool:
        return any(m.exps[i - 1] >= a for i, a in self.powers)

    def contains_component(self, other: "MIrredComponent") -> bool:
        """True iff ``other`` is a subideal of ``self``."""
        mine = self.as_dict()
        return all(i in mine and mine[i] <= a for i, a in other.powers)

    def to_ideal(self, nvars: int) -> MonomialIdeal:
        return MonomialIdeal(nvars, tuple(Monomial.from_dict(nvars, {i: a}) for i, a in self.powers))

    def sort_key(self):
        return (len(self.powers), tuple(i for i, _ in self.powers), tuple(a for _, a in self.powers))

    def __lt__(self, other: "MIrredComponent") -> bool:
        return self.sort_key() < other.sort_key()

    def to_text(self) -> list[str]:
        return [f"X{i}" if a == 1 else f"X{i}^{a}" for i, a in self.powers]

    def __str__(self):
        return "(" + ", ".join(self.to_text()) + ")"


def _decompose(gens: frozenset[Monomial], memo: dict) -> frozenset[tuple[tuple[int, int], ...]]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    mixed = sorted(m for m in gens if not m.is_pure_power())
    if not mixed:
        out = frozenset([tuple(sorted((next(iter(m.support)), max(m.exps)) for m in gens))])
    else:
        m = mixed[0]
        i = min(m.support)
        u = Monomial(tuple(e if k == i - 1 else 0 for k, e in enumerate(m.exps)))
        v = m / u
        rest = gens - {m}
        out = frozenset()
        for piece in (u, v):
            out |= _decompose(frozenset(_minimal(rest | {piece})), memo)
    memo[gens] = out
    return out


def _drop_redundant(comps):
    return [c for c in comps if not any(d != c and c.contains_component(d) for d in comps)]


def m_irreducible_decompose(i: MonomialIdeal) -> list[MIrredComponent]:
    """The unique irredundant m-irreducible decomposition of ``i``, sorted.

    Generators are added one at a time. Sums distribute over intersections of
    monomial ideals, so a component ``P`` missing the new generator
    ``m = prod X_j^{e_j}`` is replaced by the components ``P + (X_j^{e_j})``.
    Redundant components are pruned after every step.
    """
    if i.is_unit():
        raise UnitIdealError("the unit ideal has no m-irreducible decomposition")
    comps = {MIrredComponent(())}
    for m in sorted(i.gens, key=lambda m: (m.degree(), m.exps)):
        nxt = set()
        for c in comps:
            if c.contains(m):
                nxt.add(c)
                continue
            powers = c.as_dict()
            for j, e in m.as_dict().items():
                nxt.add(MIrredComponent.from_dict({**powers, j: min(e, powers.get(j, e))}))
        comps = set(_drop_redundant(nxt))
    return sorted(comps)


def decompose_by_splitting(i: MonomialIdeal) -> list[MIrredComponent]:
    """Same result as :func:`m_irreducible_decompose`, by recursive generator splitting.

    The first mixed generator ``m`` is written ``u * v`` with ``u`` its pure
    power in the lowest-index variable, and ``(J, m) = (J, u) & (J, v)`` is
    applied until only pure powers remain. Exponential; kept as a cross-check.
    """
    if i.is_unit():
        raise UnitIdealError("the unit ideal has no m-irreducible decomposition")
    raw = {MIrredComponent(p) for p in _decompose(frozenset(i.gens), {})}
    return sorted(_drop_redundant(raw))


def is_m_unmixed(i: MonomialIdeal) -> bool:
    return len({len(c) for c in m_irreducible_decompose(i)}) == 1


def krull_dimension_of_quotient(i: MonomialIdeal) -> int:
    """``dim S/i``: ``nvars`` minus the smallest component support."""
    return i.nvars - min(len(c) for c in m_irreducible_decompose(i))


def intersect_components(components: Iterable[MIrredComponent], nvars: int) -> MonomialIdeal:
    out = MonomialIdeal(nvars, (Monomial.one(nvars),))
    for c in components:
        out = intersect(out, c.to_ideal(nvars))
    return out


@dataclass(frozen=True)
class Polarization:
    """A squarefree ideal plus the ``(original variable, copy)`` label of each new variable."""

    ideal: MonomialIdeal
    varmap: tuple[tuple[int, int], ...]

    def names(self) -> list[str]:
        return [f"X{i}_{k}" for i, k in self.varmap]

    def depolarize(self) -> MonomialIdeal:
        """Substitute ``X_{i,k} -> X_i``."""
        return MonomialIdeal(self.original_nvars, tuple(
            Monomial.from_dict(self.original_nvars, _collapse(m, self.varmap)) for m in self.ideal.gens))

    @property
    def original_nvars(self) -> int:
        return max((i for i, _ in self.varmap), default=0)


def _collapse(m: Monomial, varmap) -> dict[int, int]:
    out: dict[int, int] = {}
    for e, (i, _) in zip(m.exps, varmap):
        if e:
            out[i] = out.get(i, 0) + e
    return out


def polarize(i: MonomialIdeal) -> Polarization:
    """Standard polarization: ``X_i^e`` becomes ``X_{i,1} * ... * X_{i,e}``.

    Each original variable gets as many copies as its largest exponent among
    the generators (at least one, so free variables stay as cone points).
    """
    if i.is_unit():
        raise UnitIdealError("cannot polarize the unit ideal")
    copies = [max(1, e) for e in i.max_exponents()]
    varmap = tuple((v + 1, k + 1) for v, c in enumerate(copies) for k in range(c))
    offset = [0]
    for c in copies:
        offset.append(offset[-1] + c)
    nnew = offset[-1]
    gens = []
    for m in i.gens:
        exps = [0] * nnew
        for v, e in enumerate(m.exps):
            for k in range(e):
                exps[offset[v] + k] = 1
        gens.append(Monomial(tuple(exps)))
    return Polarization(MonomialIdeal(nnew, tuple(gens)), varmap)
