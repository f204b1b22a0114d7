"""Deterministic reproduction checks for the reference examples.

Each check returns a :class:`CheckResult`; :func:`run_suite` collects them
and :func:`transcript` renders a byte-stable report (no timings, no
addresses).  ``cartan`` may be replaced by a corrupted matrix builder to
confirm that the center-table check can fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .center_table import all_simple_types, table_center
from .centerlattice import (
    CenterSubgroup,
    center_from_cartan,
    center_subgroup,
    cross_section_exists,
    subgroups,
)
from .charp import verify_sl3_crosssection_image
from .groups import named_quotient
from .killing import grothendieck_counterexample
from .monoidbasis import (
    dominant_monoid,
    hilbert_basis,
    hilbert_basis_oracle,
    quotient_report,
    smoothness_matches_theorem,
)
from .rootdata import SemisimpleType, SimpleType, cartan_matrix, root_datum

CartanBuilder = Callable[[SimpleType], Sequence[Sequence[int]]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _w(r: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    """Weight with coefficient c at 1-based index i for each (i, c)."""
    v = [0] * r
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


def _basis_of(t: SimpleType, selector: str):
    st = SemisimpleType((t,))
    return quotient_report(root_datum(st), named_quotient(st, selector))


def check_center_table(cartan: CartanBuilder = cartan_matrix, max_rank: int = 8) -> CheckResult:
    bad = []
    types = all_simple_types(max_rank)
    for t in types:
        try:
            got = center_from_cartan(cartan(t))
        except Exception as e:  # a corrupted matrix may be singular
            bad.append(f"{t} ({type(e).__name__})")
            continue
        if got != table_center(t):
            bad.append(str(t))
    return CheckResult(
        "center-table",
        not bad,
        f"{len(types)} simple types of rank <= {max_rank}" + (f"; mismatch: {', '.join(bad)}" if bad else ""),
    )


def check_b_adjoint() -> CheckResult:
    bad = []
    for r in range(1, 9):
        t = SimpleType("B", r)
        rep = _basis_of(t, "adjoint")
        want = {_w(r, (i, 1)) for i in range(1, r)} | {_w(r, (r, 2))}
        if set(rep.hilbert_basis) != want or not rep.smooth or rep.tangent_dim != r:
            bad.append(f"B{r}")
    return CheckResult("b-adjoint", not bad, "B1..B8 adjoint: H = {w1..w(r-1), 2wr}, smooth" + _fail(bad))


def check_so_even() -> CheckResult:
    bad = []
    for r in range(3, 9):
        rep = _basis_of(SimpleType("D", r), "so")
        want = {_w(r, (i, 1)) for i in range(1, r - 1)} | {
            _w(r, (r - 1, 2)),
            _w(r, (r, 2)),
            _w(r, (r - 1, 1), (r, 1)),
        }
        if set(rep.hilbert_basis) != want or rep.smooth or len(rep.hilbert_basis) != r + 1:
            bad.append(f"D{r}")
    return CheckResult("so-even", not bad, "SO(2r), r = 3..8: |H| = r+1, singular" + _fail(bad))


def check_half_spin() -> CheckResult:
    bad = []
    for r in (4, 6, 8):
        d = r // 2
        rep = _basis_of(SimpleType("D", r), "halfspin")
        odd = range(1, r + 1, 2)
        want = {_w(r, (i, 1)) for i in range(2, r + 1, 2)} | {
            _w(r, (l, 1), (m, 1)) for l in odd for m in odd if l <= m
        }
        if set(rep.hilbert_basis) != want or len(want) != d + d * (d + 1) // 2:
            bad.append(f"D{r}")
    return CheckResult("half-spin", not bad, "D4, D6, D8 half-spin: |H| = d + d(d+1)/2" + _fail(bad))


def check_e7_adjoint() -> CheckResult:
    r = 7
    rep = _basis_of(SimpleType("E", 7), "adjoint")
    want = {_w(r, (i, 1)) for i in (1, 3, 4, 6)} | {_w(r, (i, 2)) for i in (2, 5, 7)} | {
        _w(r, (2, 1), (5, 1)),
        _w(r, (2, 1), (7, 1)),
        _w(r, (5, 1), (7, 1)),
    }
    ok = set(rep.hilbert_basis) == want and rep.tangent_dim == 10 and not rep.smooth
    return CheckResult("e7-adjoint", ok, f"E7 adjoint: |H| = {len(rep.hilbert_basis)}, tangent dimension {rep.tangent_dim}")


def check_smoothness(max_rank: int = 8) -> CheckResult:
    bad = []
    pairs = 0
    for t in all_simple_types(max_rank):
        for z in subgroups(center_subgroup(t)):
            pairs += 1
            if not smoothness_matches_theorem(t, z):
                bad.append(f"{t} |Z|={z.order}")
    return CheckResult("smoothness", not bad, f"{pairs} (type, Z) pairs of rank <= {max_rank}" + _fail(bad))


def check_counterexamples() -> CheckResult:
    reports = [grothendieck_counterexample("pgl3"), grothendieck_counterexample("product")]
    ok = all(r.spectra_equal and not r.w_conjugate for r in reports)
    return CheckResult(
        "killing-counterexamples",
        ok,
        "; ".join(f"{r.kind}: spectra equal {r.spectra_equal}, W-conjugate {r.w_conjugate}" for r in reports),
    )


SL3_CASES = ((2, 1), (3, 1), (2, 2), (5, 1))


def check_sl3_char_p() -> CheckResult:
    bad = [f"p={p},d={d}" for p, d in SL3_CASES if not verify_sl3_crosssection_image(p, d)]
    return CheckResult("sl3-char-p", not bad, "(p,d) in " + " ".join(f"({p},{d})" for p, d in SL3_CASES) + _fail(bad))


def check_cross_section_predicate() -> CheckResult:
    pgl2 = center_subgroup("A1")
    table = [
        (CenterSubgroup.trivial("A1"), 0, True),
        (CenterSubgroup.trivial("E8"), 7, True),
        (pgl2, 0, False),
        (pgl2, 2, True),
        (pgl2, 3, False),
    ]
    bad = [f"{z.ambient}/|Z|={z.order}, p={p}" for z, p, want in table if cross_section_exists(z, p) != want]
    return CheckResult("cross-section-predicate", not bad, f"{len(table)} truth-table rows" + _fail(bad))


def random_pairs(rng: random.Random, n: int, max_rank: int = 6) -> list[tuple[SimpleType, CenterSubgroup]]:
    """n (simple type, Z) pairs drawn uniformly over types, then over subgroups."""
    types = all_simple_types(max_rank)
    out = []
    for _ in range(n):
        t = rng.choice(types)
        out.append((t, rng.choice(subgroups(center_subgroup(t)))))
    return out


def check_oracle_sample(seed: int, n: int = 50, max_rank: int = 6) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for t, z in random_pairs(rng, n, max_rank):
        d = dominant_monoid(root_datum(t), z)
        if hilbert_basis(d) != hilbert_basis_oracle(d, d.exponent):
            bad.append(f"{t} |Z|={z.order}")
    return CheckResult("oracle-equivalence", not bad, f"{n} sampled pairs, seed {seed}" + _fail(bad))


def _fail(bad: list[str]) -> str:
    return f"; failed: {', '.join(bad)}" if bad else ""


def run_suite(*, cartan: CartanBuilder = cartan_matrix, seed: int | None = None) -> list[CheckResult]:
    results = [
        check_center_table(cartan),
        check_b_adjoint(),
        check_so_even(),
        check_half_spin(),
        check_e7_adjoint(),
        check_smoothness(),
        check_counterexamples(),
        check_sl3_char_p(),
        check_cross_section_predicate(),
    ]
    if seed is not None:
        results.append(check_oracle_sample(seed))
    return results


def transcript(results: list[CheckResult]) -> str:
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def corrupted_cartan(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with the (1,2) entry of every rank >= 2 factor doubled.

    A test hook only: the computed centers (or the Smith form itself) then
    disagree with the closed-form table.
    """
    m = [list(row) for row in cartan_matrix(t)]
    if len(m) >= 2:
        m[0][1] *= 2
    return tuple(tuple(row) for row in m)
