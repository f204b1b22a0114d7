"""Killing-polynomial coefficients at finite-order torus points, W-conjugacy,
and the two families of adjoint groups where the coefficients of the
adjoint Killing polynomial fail to separate conjugacy classes.

A finite-order point z of the simply connected torus is a
:class:`~adjquot.centerlattice.TorusPoint`; ``z^mu = exp(2 pi i <z, mu>)``.
The characteristic polynomial of rho(z) is determined by the multiset of
eigenvalue exponents ``{<z, mu> : mu a weight of rho}`` (its coefficients
are the elementary symmetric functions of the eigenvalues), so equality of
coefficient tuples is tested as equality of sorted exponent multisets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .centerlattice import CenterSubgroup, TorusPoint, center_subgroup, pairing
from .charring import SymElement
from .errors import DomainError, InvariantViolation
from .linalg import inverse
from .rootdata import (
    RootDatum,
    SemisimpleType,
    SimpleType,
    Weight,
    as_semisimple,
    root_datum,
    weyl_group_matrices,
)

FiniteTorusElement = TorusPoint


def from_root_values(rd: RootDatum, root_exps: Sequence) -> TorusPoint:
    """A torus point z with z^{a_i} = exp(2 pi i root_exps[i]).

    Solves cartan @ q = root_exps; the lift to the simply connected torus is
    unique up to the center.
    """
    inv = inverse(rd.cartan)
    a = [Fraction(x) for x in root_exps]
    return TorusPoint(tuple(sum((inv[i][j] * a[j] for j in range(rd.rank)), Fraction(0)) for i in range(rd.rank)))


def root_values(rd: RootDatum, z: TorusPoint) -> tuple[Fraction, ...]:
    return tuple(pairing(z, alpha) for alpha in rd.simple_roots)


def adjoint_weights(rd: RootDatum) -> list[Weight]:
    """Weights of the adjoint module: every root once, zero rank times."""
    roots = list(rd.positive_roots) + [tuple(-x for x in a) for a in rd.positive_roots]
    return roots + [(0,) * rd.rank] * rd.rank


def character_weights(ch: SymElement) -> list[Weight]:
    """Weight multiset of a module from its character."""
    out = []
    for nu, c in ch.expand().items():
        if c < 0:
            raise DomainError("a virtual character has no weight multiset")
        out.extend([nu] * c)
    return out


def killing_coefficients(weights: Iterable[Sequence[int]], z: TorusPoint) -> tuple[Fraction, ...]:
    """Sorted eigenvalue exponents of rho(z) on a module with these weights."""
    return tuple(sorted(pairing(z, mu) for mu in weights))


def _act(p: Sequence[Sequence[int]], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # z -> P^T q, the action on torus exponents contragredient to P on weights
    r = len(q)
    return tuple(sum((p[k][i] * q[k] for k in range(r)), Fraction(0)) for i in range(r))


def weyl_orbit_of_point(rd: RootDatum, z: TorusPoint) -> set[TorusPoint]:
    return {TorusPoint(_act(p, z.exps)) for p in weyl_group_matrices(rd)}


def w_conjugate(
    rd: RootDatum, z1: TorusPoint, z2: TorusPoint, z: CenterSubgroup | None = None
) -> bool:
    """Is some w(z1) equal to z2 in the torus of G~/Z?  (Z = trivial by default.)"""
    if len(z1) != rd.rank or len(z2) != rd.rank:
        raise DomainError("torus points do not match the rank")
    shifts = z.elements if z is not None else (TorusPoint.identity(rd.rank),)
    targets = {z2 + c for c in shifts}
    return any(w in targets for w in weyl_orbit_of_point(rd, z1))


@dataclass(frozen=True)
class CounterexampleReport:
    kind: str
    group: str
    z1: TorusPoint
    z2: TorusPoint
    spectrum1: tuple[Fraction, ...]
    spectrum2: tuple[Fraction, ...]
    spectra_equal: bool
    w_conjugate: bool

    @property
    def verified(self) -> bool:
        return self.spectra_equal and not self.w_conjugate


def _pairwise_distinct(values: Sequence[Fraction]) -> bool:
    vals = [x % 1 for x in values]
    return len(set(vals)) == len(vals)


def pgl3_counterexample(u: Fraction = Fraction(1, 7), v: Fraction = Fraction(2, 7)) -> CounterexampleReport:
    """PGL_3: z1^{a1} = u, z1^{a2} = v and z2 with u, v swapped (as exponents)."""
    u, v = Fraction(u), Fraction(v)
    six = [u, -u, v, -v, u + v, -(u + v)]
    if not _pairwise_distinct(six):
        raise DomainError("u, 1/u, v, 1/v, uv, 1/(uv) must be pairwise different")
    rd = root_datum("A2")
    adj = center_subgroup("A2")
    z1 = from_root_values(rd, (u, v))
    z2 = from_root_values(rd, (v, u))
    return _report("pgl3", "PGL3 (A2 adjoint)", rd, adj, z1, z2)


def product_counterexample(
    h: SimpleType | str = "A1",
    a: Sequence = (Fraction(1, 5),),
    b: Sequence = (Fraction(2, 5),),
) -> CounterexampleReport:
    """G = H x H with H adjoint, z1 = (a, b), z2 = (b, a).

    ``a`` and ``b`` are given by their values on the simple roots of H and
    must lie in different W_H-orbits of the torus of H.
    """
    rd_h = root_datum(as_semisimple(h))
    if len(rd_h.type.factors) != 1:
        raise DomainError("H must be simple")
    f = rd_h.type.factors[0]
    adj_h = center_subgroup(rd_h.type)
    pa, pb = from_root_values(rd_h, a), from_root_values(rd_h, b)
    if w_conjugate(rd_h, pa, pb, adj_h):
        raise DomainError("a and b must lie in different Weyl group orbits")
    st = SemisimpleType((f, f))
    rd = root_datum(st)
    adj = center_subgroup(st)
    z1 = TorusPoint(pa.exps + pb.exps)
    z2 = TorusPoint(pb.exps + pa.exps)
    return _report("product", f"H x H, H = {f} adjoint", rd, adj, z1, z2)


def _report(kind, name, rd, adj, z1, z2) -> CounterexampleReport:
    weights = adjoint_weights(rd)
    s1 = killing_coefficients(weights, z1)
    s2 = killing_coefficients(weights, z2)
    rep = CounterexampleReport(
        kind=kind,
        group=name,
        z1=z1,
        z2=z2,
        spectrum1=s1,
        spectrum2=s2,
        spectra_equal=s1 == s2,
        w_conjugate=w_conjugate(rd, z1, z2, adj),
    )
    if not rep.verified:
        raise InvariantViolation(f"{kind} counterexample failed its own checks: {rep}")
    return rep


def grothendieck_counterexample(kind: str, **params) -> CounterexampleReport:
    if kind == "pgl3":
        return pgl3_counterexample(**params)
    if kind == "product":
        return product_counterexample(**params)
    raise DomainError(f"unknown counterexample kind {kind!r}; expected 'pgl3' or 'product'")
