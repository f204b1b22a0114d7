"""Root systems of semisimple groups in fundamental-weight coordinates.

Weights are plain integer tuples ``(m_1, ..., m_r)`` standing for
``m_1*w_1 + ... + m_r*w_r``.  Simple roots are the rows of the Cartan
matrix ``n_ij = <a_i, a_j^vee>``, and simple roots are numbered as in
Bourbaki's Planches (the only numbering accepted anywhere in the package).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import GuardExceeded, InvalidTypeError
from .linalg import Matrix, block_diagonal, inverse

Weight = tuple[int, ...]

DEFAULT_MAX_RANK = 9
DEFAULT_MAX_ORBIT = 1_000_000

_SERIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        series = str(self.series).upper()
        rank = int(self.rank)
        if series not in _SERIES:
            raise InvalidTypeError(f"unknown series {self.series!r}")
        # B1 = C1 = A1
        if series in "BC" and rank == 1:
            series = "A"
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 3,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[series]
        if not ok:
            raise InvalidTypeError(f"invalid rank {rank} for series {series}")
        object.__setattr__(self, "series", series)
        object.__setattr__(self, "rank", rank)

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class SemisimpleType:
    factors: tuple[SimpleType, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise InvalidTypeError("a semisimple type needs at least one simple factor")
        object.__setattr__(self, "factors", factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def offsets(self) -> list[int]:
        """Starting coordinate of each factor inside the product weight vector."""
        out, pos = [], 0
        for f in self.factors:
            out.append(pos)
            pos += f.rank
        return out

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


_TYPE_TOKEN = re.compile(r"([A-Ga-g])(\d+)$")


def parse_type(text: str) -> SemisimpleType:
    """Parse ``"A2"``, ``"D4xA1"`` or ``"A1xA1xG2"``."""
    factors = []
    for token in text.strip().split("x") if text.strip() else []:
        m = _TYPE_TOKEN.match(token.strip())
        if not m:
            raise InvalidTypeError(f"cannot parse simple type {token!r}")
        factors.append(SimpleType(m.group(1), int(m.group(2))))
    return SemisimpleType(tuple(factors))


def as_semisimple(t: SimpleType | SemisimpleType | str) -> SemisimpleType:
    if isinstance(t, SemisimpleType):
        return t
    if isinstance(t, SimpleType):
        return SemisimpleType((t,))
    return parse_type(t)


def _chain(r: int) -> list[list[int]]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _simple_cartan(t: SimpleType) -> list[list[int]]:
    r, s = t.rank, t.series
    if s == "A":
        return _chain(r)
    if s == "B":
        a = _chain(r)
        a[r - 2][r - 1] = -2  # a_r short
        return a
    if s == "C":
        a = _chain(r)
        a[r - 1][r - 2] = -2  # a_r long
        return a
    if s in "DE":
        if s == "D":
            # chain 1..r-1, node r attached to r-2
            edges = [(k, k + 1) for k in range(1, r - 1)] + [(r - 2, r)]
        else:
            edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, r)]
        a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if s == "F":
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    # G2: a_1 short
    return [[2, -1], [-3, 2]]


def _simple_half_lengths(t: SimpleType) -> list[int]:
    """(a_i, a_i)/2 normalised so that short roots give 1."""
    r, s = t.rank, t.series
    if s == "B":
        return [2] * (r - 1) + [1]
    if s == "C":
        return [1] * (r - 1) + [2]
    if s == "F":
        return [2, 2, 1, 1]
    if s == "G":
        return [1, 3]
    return [1] * r


def cartan_matrix(t: SimpleType | SemisimpleType | str) -> Matrix:
    """Block-diagonal Cartan matrix, Bourbaki numbering inside every factor."""
    st = as_semisimple(t)
    return block_diagonal([_simple_cartan(f) for f in st.factors])


@dataclass(frozen=True)
class RootDatum:
    type: SemisimpleType
    cartan: Matrix
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    # exact form ((w_i, w_j)) scaled to integers; only charring needs it
    gram: Matrix = field(repr=False, compare=False)
    # rows of (A^T)^{-1}: fundamental weights in simple-root coordinates
    root_coords: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def _scaled_root_coords(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        den = lcm(*(q.denominator for row in self.root_coords for q in row))
        return tuple(tuple(int(q * den) for q in row) for row in self.root_coords), den

    def scaled_root_coords(self, lam: Sequence[int]) -> tuple[tuple[int, ...], int]:
        """(k * den, den) for the root coordinates k of lam, den fixed per datum."""
        m, den = self._scaled_root_coords
        return tuple(sum(c * x for c, x in zip(row, lam)) for row in m), den

    def to_root_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients k with lam = sum k_i a_i."""
        k, den = self.scaled_root_coords(lam)
        return tuple(Fraction(x, den) for x in k)

    @cached_property
    def _height_vector(self) -> tuple[tuple[int, ...], int]:
        cols = [sum((row[j] for row in self.root_coords), Fraction(0)) for j in range(self.rank)]
        den = lcm(*(c.denominator for c in cols))
        return tuple(int(c * den) for c in cols), den

    def scaled_height(self, lam: Sequence[int]) -> int:
        """Height times a fixed positive integer; cheap and order-preserving."""
        return sum(c * x for c, x in zip(self._height_vector[0], lam))

    def height(self, lam: Sequence[int]) -> Fraction:
        return Fraction(self.scaled_height(lam), self._height_vector[1])

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        g = self.gram
        r = self.rank
        return sum(lam[i] * g[i][j] * mu[j] for i in range(r) for j in range(r) if lam[i] and mu[j])


def _positive_roots_in_root_coords(a: Matrix) -> list[tuple[int, ...]]:
    r = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for k in layer:
            for i in range(r):
                # <beta, a_i^vee>
                c = sum(k[j] * a[j][i] for j in range(r))
                p = 0
                down = list(k)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - c > 0:
                    up = list(k)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda k: (sum(k), k))


@lru_cache(maxsize=None)
def _root_datum(st: SemisimpleType) -> RootDatum:
    a = cartan_matrix(st)
    r = len(a)
    d = []
    for f in st.factors:
        d.extend(_simple_half_lengths(f))
    sym = [[a[i][j] * d[j] for j in range(r)] for i in range(r)]
    assert all(sym[i][j] == sym[j][i] for i in range(r) for j in range(r))
    a_inv = inverse(a)
    # ((w_i, w_j)) = A^{-1} diag(d)
    g = [[a_inv[i][j] * d[j] for j in range(r)] for i in range(r)]
    den = 1
    for row in g:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    gram = tuple(tuple(int(x * den) for x in row) for row in g)
    at_inv = inverse([list(col) for col in zip(*a)])
    simple = tuple(tuple(row) for row in a)
    pos = []
    for k in _positive_roots_in_root_coords(a):
        pos.append(tuple(sum(k[i] * a[i][j] for i in range(r)) for j in range(r)))
    return RootDatum(
        type=st,
        cartan=tuple(tuple(row) for row in a),
        simple_roots=simple,
        positive_roots=tuple(pos),
        rho=(1,) * r,
        gram=gram,
        root_coords=tuple(tuple(row) for row in at_inv),
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def root_datum(t: SimpleType | SemisimpleType | str) -> RootDatum:
    return _root_datum(as_semisimple(t))


def _check_weight(rd: RootDatum, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rd.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected {rd.rank}")
    return lam


def simple_reflection(rd: RootDatum, i: int, lam: Sequence[int]) -> Weight:
    """Apply s_i (1-based index) to a weight."""
    if not 1 <= i <= rd.rank:
        raise IndexError(f"simple reflection index {i} out of range 1..{rd.rank}")
    lam = _check_weight(rd, lam)
    c = lam[i - 1]
    if c == 0:
        return lam
    row = rd.cartan[i - 1]
    return tuple(x - c * y for x, y in zip(lam, row))


def is_dominant(lam: Iterable[int]) -> bool:
    return all(x >= 0 for x in lam)


def _reflect(row: Sequence[int], c: int, lam: Weight) -> Weight:
    return tuple(x - c * y for x, y in zip(lam, row))


@lru_cache(maxsize=4096)
def _orbit(rd: RootDatum, lam: Weight, max_orbit: int) -> tuple[Weight, ...]:
    seen = {lam}
    queue = deque([lam])
    rows = rd.cartan
    while queue:
        mu = queue.popleft()
        for i, row in enumerate(rows):
            c = mu[i]
            if c:
                nu = _reflect(row, c, mu)
                if nu not in seen:
                    seen.add(nu)
                    if len(seen) > max_orbit:
                        raise GuardExceeded(f"Weyl orbit larger than {max_orbit}")
                    queue.append(nu)
    return tuple(sorted(seen, reverse=True))


def _rank_guard(rd: RootDatum, max_rank: int) -> None:
    if rd.rank > max_rank:
        raise GuardExceeded(f"rank {rd.rank} exceeds guard {max_rank}")


def weyl_orbit(
    rd: RootDatum,
    lam: Sequence[int],
    *,
    max_rank: int = DEFAULT_MAX_RANK,
    max_orbit: int = DEFAULT_MAX_ORBIT,
) -> tuple[Weight, ...]:
    """W-orbit of ``lam``, reverse-lexicographically sorted (dominant element first)."""
    _rank_guard(rd, max_rank)
    return _orbit(rd, _check_weight(rd, lam), max_orbit)


def dominant_representative(rd: RootDatum, lam: Sequence[int]) -> Weight:
    lam = _check_weight(rd, lam)
    rows = rd.cartan
    while True:
        for i, c in enumerate(lam):
            if c < 0:
                lam = _reflect(rows[i], c, lam)
                break
        else:
            return lam


def weyl_group_order(
    rd: RootDatum, *, max_rank: int = DEFAULT_MAX_RANK, max_orbit: int = DEFAULT_MAX_ORBIT
) -> int:
    """|W| as the size of the (free) orbit of rho."""
    return len(weyl_orbit(rd, rd.rho, max_rank=max_rank, max_orbit=max_orbit))


def dominance_leq(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu - lam is a nonnegative integral combination of simple roots."""
    diff = [m - l for l, m in zip(_check_weight(rd, lam), _check_weight(rd, mu))]
    k, den = rd.scaled_root_coords(diff)
    return all(x >= 0 and x % den == 0 for x in k)


def weyl_group_matrices(
    rd: RootDatum, *, max_rank: int = DEFAULT_MAX_RANK, max_order: int = 100_000
) -> list[Matrix]:
    """All w in W as integer matrices P_w with w(lam) = P_w @ lam.

    Elements are told apart by their action on rho, which has trivial
    stabiliser.
    """
    _rank_guard(rd, max_rank)
    r = rd.rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    gens = []
    for i in range(r):
        # s_i = I - a_i e_i^T  (a_i = row i of the Cartan matrix, as a column)
        gens.append(
            tuple(
                tuple(int(p == q) - (rd.cartan[i][p] if q == i else 0) for q in range(r))
                for p in range(r)
            )
        )
    seen = {rd.rho: ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            prod = tuple(
                tuple(sum(g[p][k] * m[k][q] for k in range(r)) for q in range(r))
                for p in range(r)
            )
            img = tuple(sum(prod[p][q] for q in range(r)) for p in range(r))
            if img not in seen:
                seen[img] = prod
                if len(seen) > max_order:
                    raise GuardExceeded(f"|W| exceeds guard {max_order}")
                queue.append(prod)
    return [seen[k] for k in sorted(seen)]
