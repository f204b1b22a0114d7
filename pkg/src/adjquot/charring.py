"""Exact arithmetic in Z[X]^W and in the representation ring.

Elements of Z[X]^W are stored in the orbit-sum basis ``S(e^mu)`` (mu
dominant); virtual representations as integer combinations of irreducible
classes ``[E(lam)]``.  Irreducible characters come from Freudenthal's
recursion; the inverse map (characters to representations) peels off the
highest term repeatedly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .centerlattice import CenterSubgroup
from .errors import DomainError, GuardExceeded, InvariantViolation, NotInLatticeError
from .monoidbasis import (
    HilbertBasis,
    dominant_monoid,
    express_in_basis,
    group_hilbert_basis,
)
from .rootdata import (
    RootDatum,
    Weight,
    dominance_leq,
    dominant_representative,
    is_dominant,
    weyl_orbit,
)

MAX_RANK = 6
MAX_EXPANDED = 100_000


def _clean(coeffs: Mapping[Weight, int]) -> dict[Weight, int]:
    return {k: v for k, v in coeffs.items() if v}


def _order_key(rd: RootDatum, mu: Weight):
    return (rd.scaled_height(mu), mu)


@dataclass(frozen=True, eq=False)
class SymElement:
    """sum_mu coeffs[mu] * S(e^mu) with mu dominant."""

    rd: RootDatum
    coeffs: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for mu, c in self.coeffs.items():
            mu = tuple(mu)
            if not is_dominant(mu):
                raise DomainError(f"orbit-sum basis keys must be dominant, got {mu}")
            if c:
                cleaned[mu] = int(c)
        object.__setattr__(self, "coeffs", cleaned)

    def __eq__(self, other):
        return isinstance(other, SymElement) and self.rd == other.rd and self.coeffs == other.coeffs

    def __add__(self, other: "SymElement") -> "SymElement":
        out = defaultdict(int, self.coeffs)
        for k, v in other.coeffs.items():
            out[k] += v
        return SymElement(self.rd, _clean(out))

    def __neg__(self) -> "SymElement":
        return SymElement(self.rd, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "SymElement":
        return SymElement(self.rd, {mu: k * c for mu, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def support(self) -> list[Weight]:
        """Support weights, highest first."""
        return sorted(self.coeffs, key=lambda mu: _order_key(self.rd, mu), reverse=True)

    def expand(self) -> dict[Weight, int]:
        """Coefficients on every weight e^nu (not only dominant ones)."""
        out: dict[Weight, int] = {}
        for mu, c in self.coeffs.items():
            for nu in weyl_orbit(self.rd, mu):
                out[nu] = out.get(nu, 0) + c
                if len(out) > MAX_EXPANDED:
                    raise GuardExceeded(f"expansion exceeds {MAX_EXPANDED} weights")
        return out

    def augmentation(self) -> int:
        """Value at the identity: the dimension for a character."""
        return sum(c * len(weyl_orbit(self.rd, mu)) for mu, c in self.coeffs.items())

    def __repr__(self):
        terms = " + ".join(f"{c}*S{mu}" for mu, c in zip(self.support(), (self.coeffs[m] for m in self.support())))
        return f"SymElement({terms or '0'})"


@dataclass(frozen=True, eq=False)
class RepElement:
    """sum_lam mults[lam] * [E(lam)]; negative multiplicities give virtual modules."""

    rd: RootDatum
    mults: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mults", {tuple(k): int(v) for k, v in self.mults.items() if v})

    def __eq__(self, other):
        return isinstance(other, RepElement) and self.rd == other.rd and self.mults == other.mults

    def is_actual(self) -> bool:
        return all(v > 0 for v in self.mults.values())

    def terms(self) -> list[tuple[Weight, int]]:
        keys = sorted(self.mults, key=lambda mu: _order_key(self.rd, mu), reverse=True)
        return [(k, self.mults[k]) for k in keys]

    def character(self) -> SymElement:
        out = SymElement(self.rd)
        for lam, n in self.mults.items():
            out = out + n * irreducible_character(self.rd, lam)
        return out

    def dimension(self) -> int:
        return sum(n * weyl_dimension(self.rd, lam) for lam, n in self.mults.items())

    def __repr__(self):
        return "RepElement(" + " + ".join(f"{n}*E{lam}" for lam, n in self.terms()) + ")"


def _guard(rd: RootDatum, max_rank: int) -> None:
    if rd.rank > max_rank:
        raise GuardExceeded(f"rank {rd.rank} exceeds guard {max_rank}")


def orbit_sum(rd: RootDatum, mu: Sequence[int]) -> SymElement:
    mu = tuple(mu)
    if len(mu) != rd.rank or not is_dominant(mu):
        raise DomainError(f"orbit sums are indexed by dominant weights, got {mu}")
    return SymElement(rd, {mu: 1})


def one(rd: RootDatum) -> SymElement:
    return SymElement(rd, {(0,) * rd.rank: 1})


def _subtract_root(mu: Weight, alpha: Weight, k: int = 1) -> Weight:
    return tuple(a - k * b for a, b in zip(mu, alpha))


def dominant_weights_below(rd: RootDatum, lam: Weight) -> list[Weight]:
    return list(_dominant_weights_below(rd, tuple(lam)))


@lru_cache(maxsize=4096)
def _dominant_weights_below(rd: RootDatum, lam: Weight) -> tuple[Weight, ...]:
    """Dominant mu <= lam, by increasing depth below lam.

    Any two comparable dominant weights are joined by a chain of dominant
    weights differing by positive roots, so a search that only steps down by
    positive roots and only keeps dominant points reaches all of them.
    """
    seen = {lam}
    layer = [lam]
    out = [lam]
    while layer:
        nxt = []
        for mu in layer:
            for alpha in rd.positive_roots:
                nu = _subtract_root(mu, alpha)
                if is_dominant(nu) and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        nxt.sort(reverse=True)
        out.extend(nxt)
        layer = nxt
    out.sort(key=lambda mu: (-rd.scaled_height(mu), tuple(-x for x in mu)))
    return tuple(out)


@lru_cache(maxsize=2048)
def _weight_multiplicities(rd: RootDatum, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    dominant = dominant_weights_below(rd, lam)
    known = set(dominant)
    mult: dict[Weight, int] = {lam: 1}
    rho = rd.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rd.inner(lr, lr)
    for mu in dominant[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - rd.inner(mr, mr)
        total = 0
        for alpha in rd.positive_roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                dom = dominant_representative(rd, nu)
                if dom not in known:
                    break
                total += mult[dom] * rd.inner(nu, alpha)
                k += 1
        num = 2 * total
        if denom <= 0 or num % denom:
            raise InvariantViolation(f"Freudenthal recursion non-integral at {mu} in E{lam}")
        mult[mu] = num // denom
    return tuple((mu, mult[mu]) for mu in dominant)


def weight_multiplicities(rd: RootDatum, lam: Sequence[int]) -> dict[Weight, int]:
    """dim E(lam)_mu for dominant mu (zero multiplicities omitted)."""
    lam = tuple(lam)
    if len(lam) != rd.rank or not is_dominant(lam):
        raise DomainError(f"highest weight must be dominant, got {lam}")
    return {mu: m for mu, m in _weight_multiplicities(rd, lam) if m}


def irreducible_character(rd: RootDatum, lam: Sequence[int], *, max_rank: int = MAX_RANK) -> SymElement:
    _guard(rd, max_rank)
    return _character(rd, lam)


def _character(rd: RootDatum, lam: Sequence[int]) -> SymElement:
    return SymElement(rd, weight_multiplicities(rd, lam))


def weyl_dimension(rd: RootDatum, lam: Sequence[int]) -> int:
    """Weyl's dimension formula, prod over positive roots of (lam+rho, a)/(rho, a)."""
    lr = tuple(a + b for a, b in zip(lam, rd.rho))
    num = den = 1
    for alpha in rd.positive_roots:
        num *= rd.inner(lr, alpha)
        den *= rd.inner(rd.rho, alpha)
    if num % den:
        raise InvariantViolation("Weyl dimension formula gave a non-integer")
    return num // den


def multiply(x: SymElement, y: SymElement, *, max_rank: int = MAX_RANK) -> SymElement:
    if x.rd != y.rd:
        raise DomainError("factors belong to different root data")
    _guard(x.rd, max_rank)
    return _multiply(x, y)


def _multiply(x: SymElement, y: SymElement) -> SymElement:
    """Product, computing only the dominant coefficients.

    Every weight of S(e^l) S(e^m) lies below l + m, so the dominant weights
    below the pairwise sums of support terms are the only candidates.  When
    there are fewer candidates than weights in the larger expansion, each is
    evaluated by lookup; otherwise the two expansions are convolved.
    """
    rd = x.rd
    if not x.coeffs or not y.coeffs:
        return SymElement(rd)
    xf, yf = x.expand(), y.expand()
    if len(xf) < len(yf):
        xf, yf = yf, xf
    cands: set[Weight] = set()
    for lam in x.coeffs:
        for mu in y.coeffs:
            cands.update(_dominant_weights_below(rd, tuple(a + b for a, b in zip(lam, mu))))
    out: dict[Weight, int] = defaultdict(int)
    if len(cands) < len(xf):
        ys = list(yf.items())
        for s in cands:
            total = 0
            for b, cb in ys:
                ca = xf.get(tuple(u - v for u, v in zip(s, b)))
                if ca:
                    total += ca * cb
            out[s] = total
    else:
        for a, ca in xf.items():
            for b, cb in yf.items():
                s = tuple(u + v for u, v in zip(a, b))
                if is_dominant(s):
                    out[s] += ca * cb
    return SymElement(rd, _clean(out))


def power(x: SymElement, n: int, *, max_rank: int = MAX_RANK) -> SymElement:
    _guard(x.rd, max_rank)
    out = one(x.rd)
    for _ in range(n):
        out = _multiply(out, x)
    return out


def is_sharp(x: SymElement, w: Sequence[int]) -> bool:
    """e^w is the unique maximal term of x, with coefficient 1."""
    w = tuple(w)
    if x.coeffs.get(w) != 1:
        return False
    return all(mu == w or dominance_leq(x.rd, mu, w) for mu in x.coeffs)


def decompose_into_irreducibles(x: SymElement, *, max_rank: int = MAX_RANK) -> RepElement:
    """The unique virtual module whose character is x."""
    rd = x.rd
    _guard(rd, max_rank)
    rest = x
    mults: dict[Weight, int] = {}
    while rest.coeffs:
        # highest height is dominance-maximal; ties broken by larger tuple
        mu = max(rest.coeffs, key=lambda m: _order_key(rd, m))
        c = rest.coeffs[mu]
        mults[mu] = c
        rest = rest - c * _character(rd, mu)
    return RepElement(rd, mults)


def tensor_product(
    rd: RootDatum, lam: Sequence[int], mu: Sequence[int], *, max_rank: int = MAX_RANK
) -> RepElement:
    _guard(rd, max_rank)
    return decompose_into_irreducibles(
        _multiply(_character(rd, lam), _character(rd, mu)), max_rank=max_rank
    )


# -- generator certificates --------------------------------------------------

Polynomial = dict[tuple[int, ...], int]


@dataclass(frozen=True)
class Certificate:
    """ch E(weight) as an integer polynomial in X_h = ch E(h), h in the Hilbert basis."""

    weight: Weight
    generators: tuple[Weight, ...]
    polynomial: Polynomial

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(
            self.polynomial.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0]))
        )

    def render(self) -> str:
        names = ["X_(" + ",".join(map(str, h)) + ")" for h in self.generators]
        pieces = []
        for exps, c in self.terms():
            mono = "*".join(
                n + (f"^{e}" if e > 1 else "") for n, e in zip(names, exps) if e
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return head + "".join(f" {s} {b}" for s, b in pieces[1:])

    def __str__(self):
        return self.render()


def _poly_add(p: Polynomial, q: Polynomial, k: int = 1) -> Polynomial:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + k * c
        if not out[e]:
            del out[e]
    return out


def evaluate(rd: RootDatum, cert: Certificate, *, max_rank: int = MAX_RANK) -> SymElement:
    """Substitute X_h -> ch E(h) and expand."""
    _guard(rd, max_rank)
    gens = [_character(rd, h) for h in cert.generators]
    cache: dict[tuple[int, ...], SymElement] = {(0,) * len(gens): one(rd)}

    def mono(exps: tuple[int, ...]) -> SymElement:
        if exps not in cache:
            j = max(i for i, e in enumerate(exps) if e)
            lower = exps[:j] + (exps[j] - 1,) + exps[j + 1:]
            cache[exps] = _multiply(mono(lower), gens[j])
        return cache[exps]

    out = SymElement(rd)
    for exps, c in sorted(cert.polynomial.items()):
        out = out + c * mono(exps)
    return out


def express_in_hilbert_generators(
    rd: RootDatum,
    z: CenterSubgroup,
    lam: Sequence[int],
    *,
    hilbert: HilbertBasis | None = None,
    max_factor: int = 3,
    max_rank: int = MAX_RANK,
) -> Certificate:
    """Write ch E(lam) as a polynomial in the characters of the Hilbert-basis modules.

    Takes a sharp monomial M with the same highest term, splits the defect
    M - ch E(lam) into irreducibles (all strictly lower, all in D) and
    recurses.  The result is checked by substitution before it is returned.
    """
    lam = tuple(lam)
    _guard(rd, max_rank)
    monoid = dominant_monoid(rd, z)
    if len(lam) != rd.rank or not is_dominant(lam):
        raise DomainError(f"{lam} is not a dominant weight of rank {rd.rank}")
    bad = monoid.lattice.violated(lam)
    if bad is not None:
        raise NotInLatticeError(lam, bad)
    hb = hilbert if hilbert is not None else group_hilbert_basis(z)
    if max(lam, default=0) > max_factor * monoid.exponent:
        raise GuardExceeded(f"{lam} lies beyond {max_factor}x the box bound {monoid.exponent}")
    gens = hb.elements
    memo: dict[Weight, Polynomial] = {}

    def solve(mu: Weight) -> Polynomial:
        if mu in memo:
            return memo[mu]
        k = express_in_basis(hb, mu)
        if k is None:
            raise InvariantViolation(f"{mu} in D is not a sum of Hilbert basis elements")
        m = one(rd)
        for j, e in enumerate(k):
            for _ in range(e):
                m = _multiply(m, _character(rd, gens[j]))
        defect = decompose_into_irreducibles(m - _character(rd, mu), max_rank=max_rank)
        poly: Polynomial = {k: 1}
        for nu, n in defect.mults.items():
            if nu == mu or not dominance_leq(rd, nu, mu):
                raise InvariantViolation(f"defect term {nu} not strictly below {mu}")
            poly = _poly_add(poly, solve(nu), -n)
        memo[mu] = poly
        return poly

    cert = Certificate(lam, gens, solve(lam))
    if evaluate(rd, cert, max_rank=max_rank) != _character(rd, lam):
        raise InvariantViolation(f"certificate for {lam} failed verification")
    return cert

