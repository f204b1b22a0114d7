"""Group specifications: a semisimple type plus a choice of central subgroup Z.

Text form is ``"TYPE [SELECTOR]"`` where TYPE is e.g. ``A2`` or ``D4xA1``
(Bourbaki numbering within each factor) and SELECTOR is one of

* ``sc`` (default): Z trivial, the simply connected group;
* ``adjoint``: Z the full center;
* ``so``: the special orthogonal group.  B_r (and A1 = B1): the full
  center.  D_r: the kernel of the first fundamental weight on the center;
* ``halfspin``: D_r with r even, the kernel of the last fundamental weight;
* ``Z=q,...,q;q,...,q``: explicit generators of Z as exponent vectors mod 1,
  one per ``;``-separated group, e.g. ``A3 Z=1/2,0,1/2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .centerlattice import CenterSubgroup, TorusPoint, center_subgroup
from .errors import DomainError
from .rootdata import SemisimpleType, parse_type

SELECTORS = ("sc", "adjoint", "so", "halfspin")


class SpecParseError(DomainError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _unit(r: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(r))


def named_quotient(st: SemisimpleType, name: str) -> CenterSubgroup:
    """Z for the named quotient of the simply connected group of type ``st``."""
    if name == "sc":
        return CenterSubgroup.trivial(st)
    if name == "adjoint":
        return center_subgroup(st)
    if len(st.factors) != 1:
        raise DomainError(f"'{name}' needs a simple type, got {st}")
    f = st.factors[0]
    full = center_subgroup(st)
    if name == "so":
        if f.series == "B" or (f.series, f.rank) == ("A", 1):
            return full
        if f.series == "D":
            return full.kernel_of(_unit(f.rank, 0))
        raise DomainError(f"'so' is defined for types B and D (and A1 = B1), not {f}")
    if name == "halfspin":
        if f.series == "D" and f.rank % 2 == 0:
            return full.kernel_of(_unit(f.rank, f.rank - 1))
        raise DomainError(f"'halfspin' needs type D with even rank, not {f}")
    raise DomainError(f"unknown quotient name {name!r}")


@dataclass(frozen=True)
class GroupSpec:
    type: SemisimpleType
    selector: str  # one of SELECTORS or "explicit"
    z: CenterSubgroup

    @classmethod
    def named(cls, t, selector: str = "sc") -> "GroupSpec":
        st = parse_type(t) if isinstance(t, str) else t
        return cls(st, selector, named_quotient(st, selector))

    @classmethod
    def explicit(cls, t, generators) -> "GroupSpec":
        st = parse_type(t) if isinstance(t, str) else t
        return cls(st, "explicit", CenterSubgroup.generated_by(st, generators))

    def format(self) -> str:
        if self.selector != "explicit":
            return f"{self.type} {self.selector}"
        gens = ";".join(",".join(str(q) for q in g.exps) for g in self.z.generators)
        return f"{self.type} Z={gens}"

    def __str__(self):
        return self.format()


_FRACTION = re.compile(r"-?\d+(/\d+)?$")


def _parse_generators(text: str, start: int, rank: int) -> list[TorusPoint]:
    gens = []
    pos = start
    if not text[start:]:
        return gens
    for chunk in text[start:].split(";"):
        exps = []
        p = pos
        for tok in chunk.split(","):
            if not _FRACTION.match(tok.strip()):
                raise SpecParseError(text, p, f"bad exponent {tok!r}")
            exps.append(Fraction(tok.strip()))
            p += len(tok) + 1
        if len(exps) != rank:
            raise SpecParseError(text, pos, f"generator has {len(exps)} exponents, expected {rank}")
        gens.append(TorusPoint(tuple(exps)))
        pos += len(chunk) + 1
    return gens


def parse_group_spec(text: str) -> GroupSpec:
    m = re.match(r"\s*(\S+)", text)
    if not m:
        raise SpecParseError(text, 0, "empty group specification")
    try:
        st = parse_type(m.group(1))
    except DomainError as e:
        raise SpecParseError(text, m.start(1), str(e)) from None
    rest = re.match(r"\s*(\S*)\s*", text[m.end():])
    sel_pos = m.end() + rest.start(1)
    sel = rest.group(1)
    if m.end() + rest.end() != len(text):
        raise SpecParseError(text, m.end() + rest.end(), "unexpected trailing text")
    if not sel:
        return GroupSpec.named(st, "sc")
    if sel.startswith("Z="):
        gens = _parse_generators(text, sel_pos + 2, st.rank)
        try:
            return GroupSpec.explicit(st, gens)
        except DomainError as e:
            raise SpecParseError(text, sel_pos, str(e)) from None
    if sel not in SELECTORS:
        raise SpecParseError(text, sel_pos, f"unknown quotient {sel!r}; expected one of {', '.join(SELECTORS)} or Z=...")
    try:
        return GroupSpec.named(st, sel)
    except DomainError as e:
        raise SpecParseError(text, sel_pos, str(e)) from None
