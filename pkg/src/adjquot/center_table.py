"""Closed-form description of nu^{-1}(center) for each simple type.

Each row gives the center as a family ``(s^{e_1}, ..., s^{e_r})`` over the
roots of unity ``s^n = 1`` (and, for D_r with r even, a second parameter
``t``).  These are written out by hand from the classical description and
are deliberately independent of the Smith-form computation in
:mod:`adjquot.centerlattice`, which they are checked against.

The B_r row is taken as "generated by (1, ..., 1, -1)".  The row is also
commonly quoted as ``{(1, ..., 1, s^2) | s^2 = 1}``, which read literally
is the trivial group; that reading is not used.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .centerlattice import TorusPoint
from .rootdata import SimpleType


def _family(n: int, exponents: list[int]) -> frozenset[TorusPoint]:
    return frozenset(
        TorusPoint(tuple(Fraction(k * e, n) for e in exponents)) for k in range(n)
    )


def _alternating(length: int) -> list[int]:
    """1, 0, 1, 0, ... of the given length."""
    return [1 - (i % 2) for i in range(length)]


def table_center(t: SimpleType) -> frozenset[TorusPoint]:
    r, s = t.rank, t.series
    if s == "A":
        # (s, s^2, ..., s^r), s^{r+1} = 1
        return _family(r + 1, list(range(1, r + 1)))
    if s == "B":
        # generated by (1, ..., 1, -1)
        return _family(2, [0] * (r - 1) + [1])
    if s == "C":
        # (s, 1, s, 1, ..., s^{r mod 2}), s^2 = 1
        return _family(2, _alternating(r))
    if s == "D" and r % 2:
        # (s^2, 1, s^2, 1, ..., s^2, s, s^{-1}), s^4 = 1
        return _family(4, [2 * e for e in _alternating(r - 2)] + [1, -1])
    if s == "D":
        # (s, 1, s, 1, ..., s, 1, st, t), s^2 = t^2 = 1
        out = set()
        for a, b in product(range(2), repeat=2):
            head = [Fraction(a * e, 2) for e in _alternating(r - 2)]
            out.add(TorusPoint(tuple(head + [Fraction(a + b, 2), Fraction(b, 2)])))
        return frozenset(out)
    if s == "E" and r == 6:
        # (s, 1, s^{-1}, 1, s, s^{-1}), s^3 = 1
        return _family(3, [1, 0, -1, 0, 1, -1])
    if s == "E" and r == 7:
        # (1, s, 1, 1, s, 1, s), s^2 = 1
        return _family(2, [0, 1, 0, 0, 1, 0, 1])
    # E8, F4, G2: trivial
    return frozenset({TorusPoint.identity(r)})


def all_simple_types(max_rank: int = 8) -> list[SimpleType]:
    """Simple types of rank <= max_rank: A_r (r>=1), B_r, C_r (r>=2), D_r (r>=3), E, F4, G2."""
    out = [SimpleType("A", r) for r in range(1, max_rank + 1)]
    out += [SimpleType("B", r) for r in range(2, max_rank + 1)]
    out += [SimpleType("C", r) for r in range(2, max_rank + 1)]
    out += [SimpleType("D", r) for r in range(3, max_rank + 1)]
    out += [SimpleType("E", r) for r in (6, 7, 8) if r <= max_rank]
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    if max_rank >= 2:
        out.append(SimpleType("G", 2))
    return out
