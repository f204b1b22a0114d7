"""Command-line front end.

Weights are comma-separated coefficients in the fundamental-weight basis,
with simple roots numbered as in Bourbaki's tables (e.g. for D_r the two
spin nodes are r-1 and r; for E_7 the node adjacent to the branch point
on the short arm is 2).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from sympy import primefactors

from .center_table import table_center
from .centerlattice import (
    center_subgroup,
    character_lattice,
    cross_section_exists,
    fundamental_group,
    subgroups,
)
from .charring import (
    MAX_RANK,
    express_in_hilbert_generators,
    tensor_product,
    weyl_dimension,
)
from .errors import DomainError, GuardExceeded, InvariantViolation, NotInLatticeError
from .groups import GroupSpec, parse_group_spec
from .killing import grothendieck_counterexample
from .monoidbasis import (
    dominant_monoid,
    group_hilbert_basis,
    hilbert_basis_oracle,
    monomial_string,
    quotient_report,
)
from .rootdata import is_dominant, root_datum
from .smith import smith_normal_form
from .suite import corrupted_cartan, run_suite, transcript

SCHEMA_VERSION = 1
EXACT_INT_LIMIT = 2**53


class UsageError(DomainError):
    pass


# -- JSON --------------------------------------------------------------------


def jsonable(x: Any) -> Any:
    """Exact, schema-stable JSON values: Fractions and big ints become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= EXACT_INT_LIMIT else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "exps"):
        return [str(q) for q in x.exps]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- helpers -----------------------------------------------------------------


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        w = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"weight {text!r} must be comma-separated integers") from None
    if len(w) != rank:
        raise UsageError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def _dominant_in_lattice(spec: GroupSpec, w: tuple[int, ...]) -> None:
    if not is_dominant(w):
        raise DomainError(f"weight {w} is not dominant")
    bad = character_lattice(spec.z).violated(w)
    if bad is not None:
        raise NotInLatticeError(w, bad)


def _wstr(w: Sequence[int]) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def _rank_guard(rank: int, max_rank: int) -> None:
    if rank > max_rank:
        raise GuardExceeded(f"rank {rank} exceeds --max-rank {max_rank}")


def _group_block(spec: GroupSpec) -> dict:
    lat = character_lattice(spec.z)
    fg = fundamental_group(spec.type)
    return {
        "group": spec.format(),
        "type": str(spec.type),
        "rank": spec.type.rank,
        "fundamental_group": {"invariant_factors": list(fg.invariant_factors), "order": fg.order},
        "z": {
            "order": spec.z.order,
            "generators": list(spec.z.generators),
            "elements": list(spec.z.elements),
        },
        "character_lattice": {
            "congruences": [{"coefficients": list(a), "modulus": d} for a, d in lat.congruences],
            "text": str(lat),
        },
    }


# -- commands ----------------------------------------------------------------


def cmd_info(args) -> dict:
    spec = parse_group_spec(args.group)
    rep = quotient_report(root_datum(spec.type), spec.z)
    primes = primefactors(spec.z.order)
    doc = _group_block(spec)
    doc.update(
        {
            "center": list(center_subgroup(spec.type).elements),
            "hilbert_basis": list(rep.hilbert_basis),
            "invariant_monomials": [monomial_string(h) for h in rep.invariant_monomials],
            "tangent_dim": rep.tangent_dim,
            "smooth": rep.smooth,
            "free_coordinates": list(rep.free_coordinates),
            "theorem": {"smooth": rep.theorem_smooth, "agrees": rep.agrees_with_theorem},
            "note": rep.classification_note,
            "cross_section": {
                "char_0": cross_section_exists(spec.z, 0),
                "primes": {str(p): cross_section_exists(spec.z, p) for p in primes},
            },
        }
    )
    return doc


def cmd_center(args) -> dict:
    spec = parse_group_spec(args.group)
    snf = smith_normal_form(root_datum(spec.type).cartan)
    full = center_subgroup(spec.type)
    rows = []
    for f in spec.type.factors:
        computed = set(center_subgroup(f).elements)
        rows.append({"factor": str(f), "order": len(computed), "matches_table": computed == set(table_center(f))})
    doc = _group_block(spec)
    doc.update(
        {
            "smith_diagonal": list(snf.invariant_factors),
            "center": [{"point": c, "order": c.order} for c in full.elements],
            "factors": rows,
            "subgroup_orders": sorted(z.order for z in subgroups(full)),
        }
    )
    return doc


def cmd_hilbert(args) -> dict:
    spec = parse_group_spec(args.group)
    hb = group_hilbert_basis(spec.z)
    d = dominant_monoid(root_datum(spec.type), spec.z)
    doc = _group_block(spec)
    doc.update(
        {
            "hilbert_basis": list(hb),
            "invariant_monomials": [monomial_string(h) for h in hb],
            "size": len(hb),
            "coordinate_bound": d.exponent,
            "degree_bound": d.degree_bound(),
        }
    )
    if args.oracle_bound is not None:
        doc["oracle_agrees"] = hilbert_basis_oracle(d, args.oracle_bound) == hb
    return doc


def cmd_tensor(args) -> dict:
    spec = parse_group_spec(args.group)
    rd = root_datum(spec.type)
    _rank_guard(rd.rank, args.max_rank)
    lam, mu = parse_weight(args.lam, rd.rank), parse_weight(args.mu, rd.rank)
    _dominant_in_lattice(spec, lam)
    _dominant_in_lattice(spec, mu)
    rep = tensor_product(rd, lam, mu, max_rank=args.max_rank)
    terms = [
        {"highest_weight": w, "multiplicity": n, "dimension": weyl_dimension(rd, w)}
        for w, n in rep.terms()
    ]
    doc = _group_block(spec)
    doc.update(
        {
            "lambda": lam,
            "mu": mu,
            "decomposition": terms,
            "dimension": weyl_dimension(rd, lam) * weyl_dimension(rd, mu),
        }
    )
    return doc


def cmd_express(args) -> dict:
    spec = parse_group_spec(args.group)
    rd = root_datum(spec.type)
    _rank_guard(rd.rank, args.max_rank)
    lam = parse_weight(args.lam, rd.rank)
    _dominant_in_lattice(spec, lam)
    cert = express_in_hilbert_generators(rd, spec.z, lam, max_rank=args.max_rank)
    doc = _group_block(spec)
    doc.update(
        {
            "lambda": lam,
            "generators": list(cert.generators),
            "polynomial": cert.render(),
            "terms": [{"exponents": e, "coefficient": c} for e, c in cert.terms()],
            "verified": True,
        }
    )
    return doc


def cmd_counterexample(args) -> dict:
    if args.kind == "pgl3":
        params = {"u": Fraction(args.u), "v": Fraction(args.v)}
    else:
        params = {
            "h": args.h,
            "a": tuple(Fraction(t) for t in args.a.split(",")),
            "b": tuple(Fraction(t) for t in args.b.split(",")),
        }
    rep = grothendieck_counterexample(args.kind, **params)
    return {
        "kind": rep.kind,
        "group": rep.group,
        "z1": rep.z1,
        "z2": rep.z2,
        "spectrum1": list(rep.spectrum1),
        "spectrum2": list(rep.spectrum2),
        "spectra_equal": rep.spectra_equal,
        "w_conjugate": rep.w_conjugate,
        "verified": rep.verified,
    }


def cmd_suite(args) -> dict:
    kwargs = {"seed": args.seed}
    if args.corrupt_cartan:
        kwargs["cartan"] = corrupted_cartan
    results = run_suite(**kwargs)
    return {
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        "passed": all(r.passed for r in results),
        "transcript": transcript(results),
    }


# -- human-readable rendering ------------------------------------------------


def _fmt(v: Any, nested: bool = False) -> str:
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return _wstr(v)
    if hasattr(v, "exps"):
        return str(v)
    if isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        return "[" + ", ".join(map(str, v)) + "]"
    if isinstance(v, list):
        return "{" + ", ".join(_fmt(x, True) for x in v) + "}"
    if isinstance(v, dict):
        body = ", ".join(f"{k}={_fmt(x, True)}" for k, x in v.items())
        return "{" + body + "}" if nested else body
    return str(v)


def render_text(command: str, doc: dict) -> str:
    if command == "paper-suite":
        return doc["transcript"]
    lines = []
    if command == "tensor":
        lines.append(f"{doc['group']}: E{_wstr(doc['lambda'])} x E{_wstr(doc['mu'])}  (dim {doc['dimension']})")
        for t in doc["decomposition"]:
            lines.append(f"  {t['multiplicity']:>4} x E{_wstr(t['highest_weight'])}  dim {t['dimension']}")
        return "\n".join(lines) + "\n"
    if command == "express":
        names = ", ".join(f"X_{_wstr(h)}" for h in doc["generators"])
        return f"{doc['group']}: ch E{_wstr(doc['lambda'])} = {doc['polynomial']}\n  generators: {names}\n  verified by substitution\n"
    width = max(len(k) for k in doc)
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k:<{width}}")
            lines.extend(f"{'':<{width}}  {_fmt(x)}" for x in v)
        else:
            lines.append(f"{k:<{width}}  {_fmt(v)}")
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="emit JSON instead of a table")
    p.add_argument("--max-rank", type=int, default=d(MAX_RANK), help="rank guard for character computations")
    p.add_argument("--seed", type=int, default=d(None), help="seed for randomized sampling (reproduction checks are deterministic)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adjquot", description="Dominant-weight monoids, Hilbert bases and adjoint quotients.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        return p

    group_help = "group, e.g. 'E7 adjoint', 'D4 halfspin', 'A3 Z=1/2,0,1/2'"
    add("info", "full report for G = G~/Z").add_argument("group", help=group_help)
    add("center", "center, Smith form and subgroups").add_argument("group", help=group_help)
    p = add("hilbert", "Hilbert basis of the dominant monoid")
    p.add_argument("group", help=group_help)
    p.add_argument("--oracle-bound", type=int, help="also compare with the box oracle of this bound")
    p = add("tensor", "decompose E(lambda) x E(mu)")
    p.add_argument("group", help=group_help)
    p.add_argument("lam")
    p.add_argument("mu")
    p = add("express", "ch E(lambda) as a polynomial in Hilbert-basis characters")
    p.add_argument("group", help=group_help)
    p.add_argument("lam")
    p = add("counterexample", "Killing-polynomial counterexamples")
    p.add_argument("kind", choices=["pgl3", "product"])
    p.add_argument("--u", default="1/7", help="pgl3: first root exponent")
    p.add_argument("--v", default="2/7", help="pgl3: second root exponent")
    p.add_argument("--h", default="A1", help="product: simple type of H")
    p.add_argument("--a", default="1/5", help="product: root exponents of a")
    p.add_argument("--b", default="2/5", help="product: root exponents of b")
    p = add("paper-suite", "run every reproduction check")
    p.add_argument("--corrupt-cartan", action="store_true", help=argparse.SUPPRESS)
    return parser


COMMANDS = {
    "info": cmd_info,
    "center": cmd_center,
    "hilbert": cmd_hilbert,
    "tensor": cmd_tensor,
    "express": cmd_express,
    "counterexample": cmd_counterexample,
    "paper-suite": cmd_suite,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = "--json" in (argv if argv is not None else sys.argv[1:])
    try:
        args = build_parser().parse_args(argv)
        as_json = args.json
        doc = COMMANDS[args.command](args)
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, **doc}
        out.write(dumps(doc) if as_json else render_text(args.command, doc))
        if args.command == "paper-suite" and not doc["passed"]:
            return 2
        return 0
    except (DomainError, GuardExceeded, ValueError) as e:
        code, kind, message = 1, "domain_error", str(e)
    except InvariantViolation as e:
        code, kind, message = 2, "invariant_violation", str(e)
    if as_json:
        out.write(dumps({"schema_version": SCHEMA_VERSION, "error": {"kind": kind, "message": message}}))
    err.write(f"error: {message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
