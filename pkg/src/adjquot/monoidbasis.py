"""The monoid D of dominant weights in X(T), its Hilbert basis, and G//G data.

D is the submonoid of N^r cut out by the congruences of a
:class:`~adjquot.centerlattice.CharacterLattice`; equivalently the kernel
of a homomorphism ``phi: N^r -> A`` into the finite group
``A = X(T^) / X(T)``, which is dual to Z.  Two consequences drive the
search for indecomposables:

* if ``e`` is the exponent of A then ``e * e_i`` lies in D, so no
  indecomposable has a coordinate above ``e``;
* a sequence of ``|A|`` elements of A always has a nonempty zero-sum
  subsequence (pigeonhole on prefix sums), so no indecomposable has total
  degree above ``|A|``.

Both bounds are checked at run time, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from .centerlattice import (
    CenterSubgroup,
    CharacterLattice,
    character_lattice,
    is_full_center,
)
from .errors import DomainError, InvariantViolation
from .rootdata import RootDatum, SemisimpleType, SimpleType, Weight, as_semisimple


@dataclass(frozen=True)
class CongruenceMonoid:
    rank: int
    lattice: CharacterLattice

    def __contains__(self, m: Sequence[int]) -> bool:
        return membership(self, m)

    def class_of(self, m: Sequence[int]) -> tuple[int, ...]:
        """Image of m in A = Z^r / X(T), as residues against each congruence."""
        return tuple(sum(a * x for a, x in zip(av, m)) % d for av, d in self.lattice.congruences)

    def class_group(self) -> set[tuple[int, ...]]:
        """The image of phi, i.e. A (phi is onto because the e_i span Z^r)."""
        mods = [d for _, d in self.lattice.congruences]
        zero = tuple(0 for _ in mods)
        gens = [self.class_of(e) for e in _unit_vectors(self.rank)]
        elems = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple((u + v) % d for u, v, d in zip(x, g, mods))
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return elems

    @property
    def exponent(self) -> int:
        """Smallest e with e * e_i in D for every i."""
        return lcm(1, *(d for _, d in self.lattice.congruences))

    def degree_bound(self) -> int:
        return len(self.class_group())


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[Weight, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.elements)

    def __contains__(self, m) -> bool:
        return tuple(m) in self.elements


def graded_key(m: Sequence[int]) -> tuple:
    """Total degree first, then reverse-lexicographic: (1,0) before (0,1)."""
    return (sum(m), tuple(-x for x in m))


def _unit_vectors(r: int) -> list[Weight]:
    return [tuple(int(i == j) for j in range(r)) for i in range(r)]


def dominant_monoid(rd: RootDatum, z: CenterSubgroup) -> CongruenceMonoid:
    if rd.rank != z.rank:
        raise DomainError(f"rank mismatch: root datum {rd.rank}, center subgroup {z.rank}")
    return CongruenceMonoid(rd.rank, character_lattice(z))


def membership(d: CongruenceMonoid, m: Sequence[int]) -> bool:
    return len(m) == d.rank and all(x >= 0 for x in m) and tuple(m) in d.lattice


def _bounded_region(r: int, box: int, degree: int) -> list[Weight]:
    """{m : 0 <= m_i <= box, sum m <= degree}, in graded order (downward closed)."""
    out: list[Weight] = []

    def rec(prefix: list[int], left: int):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for x in range(min(box, left) + 1):
            prefix.append(x)
            rec(prefix, left - x)
            prefix.pop()

    rec([], degree)
    out.sort(key=graded_key)
    return out


def hilbert_basis(d: CongruenceMonoid) -> HilbertBasis:
    """Indecomposable elements of D.

    Walks a downward-closed region in graded order and propagates, for each
    point m, whether some nonzero element of D lies strictly below m.  Since
    D is the kernel of a group homomorphism, ``a <= m`` with a, m in D forces
    ``m - a`` into D, so m is indecomposable exactly when nothing in D_+
    sits strictly below it.
    """
    r = d.rank
    e = d.exponent
    for u in _unit_vectors(r):
        if tuple(e * x for x in u) not in d:
            raise InvariantViolation(f"{e} * {u} is not in D; box bound unusable")
    degree = d.degree_bound()
    region = _bounded_region(r, e, min(degree, e * r))
    below: dict[Weight, bool] = {}
    in_d: dict[Weight, bool] = {}
    basis = []
    for m in region:
        hit = False
        for i in range(r):
            if m[i]:
                p = m[:i] + (m[i] - 1,) + m[i + 1:]
                if below[p] or (in_d[p] and any(p)):
                    hit = True
                    break
        below[m] = hit
        in_d[m] = m in d
        if in_d[m] and any(m) and not hit:
            basis.append(m)
    return HilbertBasis(tuple(sorted(basis, key=graded_key)))


def hilbert_basis_oracle(d: CongruenceMonoid, bound: int) -> HilbertBasis:
    """Indecomposables of D by greedy subtraction over the full box [0, bound]^r.

    Independent of :func:`hilbert_basis`: no degree bound, no propagation.
    Each point of D is tested against every basis element confirmed so far;
    it is decomposable iff subtracting one leaves a nonzero element of D.
    """
    if bound < d.exponent:
        raise ValueError(f"bound {bound} below the exponent {d.exponent}")
    r = d.rank
    points = [m for m in product(range(bound + 1), repeat=r) if any(m) and membership(d, m)]
    points.sort(key=graded_key)
    found = np.zeros((0, r), dtype=np.int64)
    basis: list[Weight] = []
    for m in points:
        arr = np.asarray(m, dtype=np.int64)
        if len(basis):
            diff = arr - found
            cand = np.nonzero((diff >= 0).all(axis=1) & diff.any(axis=1))[0]
            if any(membership(d, tuple(int(x) for x in diff[k])) for k in cand):
                continue
        basis.append(m)
        found = np.vstack([found, arr])
    return HilbertBasis(tuple(sorted(basis, key=graded_key)))


def express_in_basis(h: HilbertBasis, m: Sequence[int]) -> tuple[int, ...] | None:
    """Some k in N^|H| with sum k_j h_j = m, or None; depth-first in basis order."""
    basis = h.elements
    target = tuple(m)
    memo: dict[Weight, tuple[int, ...] | None] = {}

    def rec(rest: Weight) -> tuple[int, ...] | None:
        if not any(rest):
            return (0,) * len(basis)
        if rest in memo:
            return memo[rest]
        memo[rest] = None
        for j, b in enumerate(basis):
            if all(x >= y for x, y in zip(rest, b)):
                sub = rec(tuple(x - y for x, y in zip(rest, b)))
                if sub is not None:
                    memo[rest] = sub[:j] + (sub[j] + 1,) + sub[j + 1:]
                    break
        return memo[rest]

    return rec(target)


# -- the quotient G//G -----------------------------------------------------


@dataclass(frozen=True)
class QuotientReport:
    hilbert_basis: HilbertBasis
    tangent_dim: int
    smooth: bool
    invariant_monomials: tuple[Weight, ...]
    classification_note: str
    theorem_smooth: bool
    free_coordinates: tuple[int, ...]

    @property
    def agrees_with_theorem(self) -> bool:
        return self.smooth == self.theorem_smooth


def _embed(h: Weight, offset: int, total: int) -> Weight:
    return (0,) * offset + h + (0,) * (total - offset - len(h))


def group_hilbert_basis(z: CenterSubgroup) -> HilbertBasis:
    """H for G~/Z; a split Z is handled factor by factor."""
    st = z.ambient
    r = st.rank
    if len(st.factors) > 1 and z.splits():
        out = []
        for part, off in zip(z.factor_parts(), st.offsets()):
            hb = hilbert_basis(CongruenceMonoid(part.rank, character_lattice(part)))
            out.extend(_embed(h, off, r) for h in hb)
        return HilbertBasis(tuple(sorted(out, key=graded_key)))
    return hilbert_basis(CongruenceMonoid(r, character_lattice(z)))


def _is_odd_orthogonal(f: SimpleType, part: CenterSubgroup) -> bool:
    """Is G~/Z isomorphic to SO_n with n odd?  B_r adjoint, and the low-rank
    coincidences SO_3 = PGL_2 and SO_5 = PSp_4."""
    if part.is_trivial() or not is_full_center(part):
        return False
    return f.series == "B" or (f.series, f.rank) in {("A", 1), ("C", 2)}


def theorem_classification(z: CenterSubgroup) -> tuple[bool, str]:
    """Smoothness predicted from the group alone: G must be a direct product of
    simple groups each simply connected or an odd special orthogonal group."""
    st = z.ambient
    if not z.splits():
        return False, "Z is not a product over the simple factors; G is not a direct product of simple groups"
    verdicts = []
    ok = True
    for f, part in zip(st.factors, z.factor_parts()):
        if part.is_trivial():
            verdicts.append(f"{f}: simply connected")
        elif _is_odd_orthogonal(f, part):
            verdicts.append(f"{f}: odd special orthogonal (SO_{2 * f.rank + 1})")
        else:
            verdicts.append(f"{f}: quotient by center subgroup of order {part.order}, neither")
            ok = False
    return ok, "; ".join(verdicts)


def monomial_string(m: Weight) -> str:
    parts = [f"y{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(m) if x]
    return "*".join(parts) or "1"


def quotient_report(rd: RootDatum, z: CenterSubgroup) -> QuotientReport:
    if rd.rank != z.rank:
        raise DomainError(f"rank mismatch: root datum {rd.rank}, center subgroup {z.rank}")
    hb = group_hilbert_basis(z)
    r = rd.rank
    units = _unit_vectors(r)
    free = tuple(i + 1 for i, u in enumerate(units) if u in hb)
    theorem_ok, verdict = theorem_classification(z)
    smooth = len(hb) == r
    k = len(free)
    if smooth:
        shape = f"G//G = A^{r}"
    elif k:
        shape = f"G//G = A^{k} x Y, Y a toric cone of dimension {r - k} embedded in A^{len(hb) - k}"
    else:
        shape = f"G//G is a toric cone of dimension {r} embedded in A^{len(hb)}"
    note = (
        f"{shape}; tangent space at the T-fixed point has dimension {len(hb)}. "
        f"Group classification: {verdict} => {'smooth' if theorem_ok else 'singular'}"
        f" ({'agrees' if theorem_ok == smooth else 'DISAGREES'})."
    )
    return QuotientReport(
        hilbert_basis=hb,
        tangent_dim=len(hb),
        smooth=smooth,
        invariant_monomials=hb.elements,
        classification_note=note,
        theorem_smooth=theorem_ok,
        free_coordinates=free,
    )


def smoothness_matches_theorem(t: SimpleType | SemisimpleType, z: CenterSubgroup) -> bool:
    st = as_semisimple(t)
    if st != z.ambient:
        raise DomainError(f"type {st} does not match center subgroup of {z.ambient}")
    smooth = len(group_hilbert_basis(z)) == st.rank
    return smooth == theorem_classification(z)[0]

