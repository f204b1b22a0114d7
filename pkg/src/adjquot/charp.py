"""Image of a non-separable SL_3 cross-section in characteristic p.

For ``q = p^d`` the matrices

    s(a1, a2) = [[a1, a2, 1], [1, a1^q - a1, 0], [0, 1, 0]]

have determinant 1, and the fundamental characters (trace and sum of
principal 2-minors) send s(a1, a2) to ``(a1^q, a1 (a1^q - a1) - a2)``.  The
check below is done with polynomial arithmetic in GF(p)[a1, a2].
"""

from __future__ import annotations

from itertools import combinations

from sympy import Poly, symbols

from .errors import DomainError, GuardExceeded

MAX_FROBENIUS_DEGREE = 10**4

a1, a2 = symbols("a1 a2")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def _poly(expr, p: int) -> Poly:
    return Poly(expr, a1, a2, modulus=p)


def section_matrix(p: int, d: int) -> list[list[Poly]]:
    q = p**d
    rows = [[a1, a2, 1], [1, a1**q - a1, 0], [0, 1, 0]]
    return [[_poly(x, p) for x in row] for row in rows]


def _minor(m: list[list[Poly]], idx: tuple[int, ...]) -> Poly:
    if len(idx) == 1:
        return m[idx[0]][idx[0]]
    if len(idx) == 2:
        i, j = idx
        return m[i][i] * m[j][j] - m[i][j] * m[j][i]
    # 3x3, by cofactor expansion along the first row
    (r0, r1, r2) = (m[i] for i in idx)
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def principal_minor_sums(m: list[list[Poly]]) -> list[Poly]:
    """[sum of principal i-minors for i = 1, 2, 3]."""
    n = len(m)
    out = []
    for k in range(1, n + 1):
        terms = [_minor(m, idx) for idx in combinations(range(n), k)]
        total = terms[0]
        for t in terms[1:]:
            total = total + t
        out.append(total)
    return out


def verify_sl3_crosssection_image(p: int, d: int) -> bool:
    if not _is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if d < 1:
        raise DomainError(f"d must be a positive integer, got {d}")
    q = p**d
    if q > MAX_FROBENIUS_DEGREE:
        raise GuardExceeded(f"p^d = {q} exceeds guard {MAX_FROBENIUS_DEGREE}")
    chi1, chi2, det = principal_minor_sums(section_matrix(p, d))
    return (
        det == _poly(1, p)
        and chi1 == _poly(a1**q, p)
        and chi2 == _poly(a1 * (a1**q - a1) - a2, p)
    )
