"""Centers, fundamental groups and character lattices of isogeny quotients.

A point of the simply connected maximal torus is written through the
coroot parametrisation ``nu(s_1, ..., s_r) = prod a_i^vee(s_i)``, under
which ``nu(s)^{w_i} = s_i``.  Finite-order points are stored as exact
exponent vectors ``q`` in ``(Q/Z)^r`` with ``s_i = exp(2 pi i q_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DomainError
from .rootdata import SemisimpleType, SimpleType, as_semisimple, cartan_matrix
from .smith import smith_normal_form


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(self.invariant_factors)
        if any(d < 2 for d in f) or any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"not a divisibility chain of factors >= 2: {f}")
        object.__setattr__(self, "invariant_factors", f)

    @property
    def order(self) -> int:
        return reduce(lambda x, y: x * y, self.invariant_factors, 1)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def _mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class TorusPoint:
    """Finite-order torus point as exponents mod 1 against the fundamental weights."""

    exps: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(_mod1(x) for x in self.exps))

    @classmethod
    def parse(cls, text: str) -> "TorusPoint":
        return cls(tuple(Fraction(tok.strip()) for tok in text.split(",")))

    @classmethod
    def identity(cls, rank: int) -> "TorusPoint":
        return cls((Fraction(0),) * rank)

    def __len__(self):
        return len(self.exps)

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(tuple(-a for a in self.exps))

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        return self + (-other)

    def __rmul__(self, k: int) -> "TorusPoint":
        return TorusPoint(tuple(k * a for a in self.exps))

    @property
    def order(self) -> int:
        return lcm(*(x.denominator for x in self.exps)) if self.exps else 1

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.exps) + ")"


def pairing(c: TorusPoint, lam: Sequence[int]) -> Fraction:
    """Exponent of the root of unity ``c^lam``, in [0, 1)."""
    if len(c.exps) != len(lam):
        raise ValueError(f"torus point of length {len(c.exps)} paired with weight of length {len(lam)}")
    return _mod1(sum((q * m for q, m in zip(c.exps, lam)), Fraction(0)))


def solves_center_system(cartan: Sequence[Sequence[int]], c: TorusPoint) -> bool:
    """prod_j s_j^{n_ij} = 1 for every i, i.e. c is central."""
    return all(
        sum((n * q for n, q in zip(row, c.exps)), Fraction(0)).denominator == 1 for row in cartan
    )


def _closure(rank: int, gens: Iterable[TorusPoint]) -> tuple[TorusPoint, ...]:
    elems = {TorusPoint.identity(rank)}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(elems))


def _canonical_generators(rank: int, elements: Sequence[TorusPoint]) -> tuple[TorusPoint, ...]:
    """Greedy generating set: scan elements by (order desc, value) and keep those not yet spanned."""
    gens: list[TorusPoint] = []
    span = {TorusPoint.identity(rank)}
    for x in sorted(elements, key=lambda p: (-p.order, p)):
        if x not in span:
            gens.append(x)
            span = set(_closure(rank, gens))
        if len(span) == len(elements):
            break
    return tuple(gens)


@dataclass(frozen=True)
class CenterSubgroup:
    """A subgroup Z of the center of the simply connected group of type ``ambient``."""

    ambient: SemisimpleType
    generators: tuple[TorusPoint, ...]
    elements: tuple[TorusPoint, ...]

    @classmethod
    def generated_by(cls, ambient, gens: Iterable[TorusPoint]) -> "CenterSubgroup":
        ambient = as_semisimple(ambient)
        r = ambient.rank
        gens = [g if isinstance(g, TorusPoint) else TorusPoint(tuple(g)) for g in gens]
        cm = cartan_matrix(ambient)
        for g in gens:
            if len(g) != r:
                raise DomainError(f"generator {g} has length {len(g)}, expected {r}")
            if not solves_center_system(cm, g):
                raise DomainError(f"{g} is not central in type {ambient}")
        elements = _closure(r, gens)
        return cls(ambient, _canonical_generators(r, elements), elements)

    @classmethod
    def trivial(cls, ambient) -> "CenterSubgroup":
        return cls.generated_by(ambient, [])

    @property
    def rank(self) -> int:
        return self.ambient.rank

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return lcm(*(c.order for c in self.elements))

    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, c: TorusPoint) -> bool:
        return c in set(self.elements)

    def issubset(self, other: "CenterSubgroup") -> bool:
        return set(self.elements) <= set(other.elements)

    def kernel_of(self, lam: Sequence[int]) -> "CenterSubgroup":
        """{c in Z : c^lam = 1}."""
        return CenterSubgroup.generated_by(
            self.ambient, [c for c in self.elements if pairing(c, lam) == 0]
        )

    def factor_parts(self) -> list["CenterSubgroup"]:
        """Z intersected with the center of each simple factor, in factor coordinates."""
        parts = []
        for f, off in zip(self.ambient.factors, self.ambient.offsets()):
            inside = []
            for c in self.elements:
                outside = c.exps[:off] + c.exps[off + f.rank:]
                if not any(outside):
                    inside.append(TorusPoint(c.exps[off:off + f.rank]))
            parts.append(CenterSubgroup.generated_by(SemisimpleType((f,)), inside))
        return parts

    def splits(self) -> bool:
        """True iff Z is the direct product of its intersections with the factor centers."""
        prod_order = reduce(lambda x, y: x * y, (p.order for p in self.factor_parts()), 1)
        return prod_order == self.order


def fundamental_group(t: SimpleType | SemisimpleType | str) -> FiniteAbelianGroup:
    """Cokernel of the Cartan matrix: invariant factors > 1 of its Smith form."""
    snf = smith_normal_form(cartan_matrix(t))
    return FiniteAbelianGroup(tuple(d for d in snf.invariant_factors if d > 1))


def center_from_cartan(cartan: Sequence[Sequence[int]]) -> frozenset[TorusPoint]:
    """All q in (Q/Z)^r with cartan @ q integral.

    With ``U A V = diag(d)`` the substitution ``q = V y`` turns the system
    into ``d_i y_i in Z``; V is unimodular so it permutes (Q/Z)^r.
    """
    snf = smith_normal_form(cartan)
    r = len(cartan)
    v = snf.right
    d = snf.invariant_factors
    if any(x == 0 for x in d):
        raise ValueError("singular Cartan matrix has an infinite center")
    gens = []
    for i in range(r):
        if d[i] > 1:
            gens.append(TorusPoint(tuple(Fraction(v[k][i], d[i]) for k in range(r))))
    return frozenset(_closure(r, gens))


@lru_cache(maxsize=None)
def _center(st: SemisimpleType) -> CenterSubgroup:
    elements = center_from_cartan(cartan_matrix(st))
    return CenterSubgroup.generated_by(st, elements)


def center_subgroup(t: SimpleType | SemisimpleType | str) -> CenterSubgroup:
    """The full center of the simply connected group of type ``t``."""
    return _center(as_semisimple(t))


def subgroups(c: CenterSubgroup, *, max_order: int = 4096) -> list[CenterSubgroup]:
    """Every subgroup of ``c``, sorted by (order, elements); trivial and full included."""
    if c.order > max_order:
        raise ValueError(f"center of order {c.order} exceeds guard {max_order}")
    r = c.rank
    trivial = _closure(r, [])
    found = {trivial: ()}
    frontier = [trivial]
    while frontier:
        nxt = []
        for s in frontier:
            members = set(s)
            for x in c.elements:
                if x not in members:
                    gens = found[s] + (x,)
                    j = _closure(r, gens)
                    if j not in found:
                        found[j] = gens
                        nxt.append(j)
        frontier = nxt
    out = [CenterSubgroup.generated_by(c.ambient, gens) for gens in found.values()]
    return sorted(out, key=lambda z: (z.order, z.elements))


@dataclass(frozen=True)
class CharacterLattice:
    """{m in Z^r : a . m = 0 mod d for every (a, d) in congruences}."""

    rank: int
    congruences: tuple[tuple[tuple[int, ...], int], ...]

    def violated(self, m: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
        for a, d in self.congruences:
            if sum(x * y for x, y in zip(a, m)) % d:
                return a, d
        return None

    def __contains__(self, m: Sequence[int]) -> bool:
        return len(m) == self.rank and self.violated(m) is None

    def __str__(self):
        if not self.congruences:
            return "Z^%d" % self.rank
        parts = []
        for a, d in self.congruences:
            lhs = " + ".join(
                (f"m{i + 1}" if c == 1 else f"{c}*m{i + 1}") for i, c in enumerate(a) if c
            )
            parts.append(f"{lhs} = 0 mod {d}")
        return "; ".join(parts)


def character_lattice(z: CenterSubgroup) -> CharacterLattice:
    """X(T) for G = G~/Z: one congruence per canonical generator of Z."""
    cong = []
    for c in z.generators:
        d = c.order
        a = tuple(int(q * d) for q in c.exps)
        g = reduce(gcd, a, d)
        cong.append((tuple(x // g for x in a), d // g))
    return CharacterLattice(z.rank, tuple(cong))


def cross_section_exists(z: CenterSubgroup, p: int = 0) -> bool:
    """Whether G = G~/Z admits a cross-section, in characteristic ``p``.

    The covering isogeny is bijective iff it is an isomorphism (Z trivial) or
    purely inseparable, taken here as: p > 0 divides the order of the
    fundamental group of G, which is |Z|.
    """
    if p < 0 or (p > 1 and any(p % k == 0 for k in range(2, int(p**0.5) + 1))) or p == 1:
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    if z.is_trivial():
        return True
    return p > 0 and z.order % p == 0


def is_full_center(z: CenterSubgroup) -> bool:
    return z.order == center_subgroup(z.ambient).order
