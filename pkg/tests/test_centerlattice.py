from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adjquot.center_table import all_simple_types, table_center
from adjquot.centerlattice import (
    CenterSubgroup,
    TorusPoint,
    center_from_cartan,
    center_subgroup,
    character_lattice,
    cross_section_exists,
    fundamental_group,
    is_full_center,
    pairing,
    solves_center_system,
    subgroups,
)
from adjquot.errors import DomainError
from adjquot.linalg import determinant
from adjquot.rootdata import SemisimpleType, SimpleType, cartan_matrix, root_datum
from adjquot.suite import corrupted_cartan

ALL = all_simple_types(8)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_center_matches_closed_form(t):
    assert set(center_subgroup(SemisimpleType((t,))).elements) == table_center(t)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_center_order_is_determinant(t):
    c = center_from_cartan(cartan_matrix(SemisimpleType((t,))))
    assert len(c) == determinant(cartan_matrix(SemisimpleType((t,)))) == fundamental_group(SemisimpleType((t,))).order
    a = cartan_matrix(SemisimpleType((t,)))
    assert all(solves_center_system(a, x) for x in c)
    assert all(x + y in c for x in c for y in c)


@pytest.mark.parametrize(
    "name,factors",
    [
        ("A1", (2,)),
        ("A4", (5,)),
        ("B3", (2,)),
        ("C5", (2,)),
        ("D4", (2, 2)),
        ("D5", (4,)),
        ("E6", (3,)),
        ("E7", (2,)),
        ("E8", ()),
        ("F4", ()),
        ("G2", ()),
        ("D4xA1", (2, 2, 2)),
        ("A2xA2", (3, 3)),
        ("A1xA3", (2, 4)),
    ],
)
def test_fundamental_group(name, factors):
    assert fundamental_group(name).invariant_factors == factors


def test_table_rows_by_hand():
    half = Fraction(1, 2)
    assert table_center(SimpleType("A", 1)) == {TorusPoint((0,)), TorusPoint((half,))}
    d5 = center_subgroup("D5")
    assert TorusPoint((half, 0, half, Fraction(1, 4), Fraction(3, 4))) in d5
    assert d5.exponent == 4
    e6 = center_subgroup("E6")
    assert TorusPoint.parse("1/3,0,2/3,0,1/3,2/3") in e6


def test_corrupted_cartan_changes_center():
    t = SimpleType("A", 2)
    assert center_from_cartan(corrupted_cartan(t)) != table_center(t)


def test_torus_point_arithmetic():
    p = TorusPoint.parse("1/3, 5/3")
    assert p.exps == (Fraction(1, 3), Fraction(2, 3))
    assert (p + p).exps == (Fraction(2, 3), Fraction(1, 3))
    assert (3 * p).is_identity()
    assert p.order == 3
    assert (p - p) == TorusPoint.identity(2)
    assert TorusPoint((Fraction(-1, 4),)).exps == (Fraction(3, 4),)


def test_pairing():
    c = TorusPoint.parse("1/3,2/3")
    assert pairing(c, (1, 1)) == 0
    assert pairing(c, (1, 0)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        pairing(c, (1, 0, 0))


@pytest.mark.parametrize("name,count", [("A1", 2), ("A3", 3), ("D4", 5), ("A5", 4), ("D4xA1", 16), ("E8", 1)])
def test_subgroup_counts(name, count):
    subs = subgroups(center_subgroup(name))
    assert len(subs) == count
    full = center_subgroup(name)
    assert all(full.order % z.order == 0 and z.issubset(full) for z in subs)
    assert subs[0].is_trivial() and subs[-1].order == full.order


def test_generated_by_rejects_noncentral():
    with pytest.raises(DomainError):
        CenterSubgroup.generated_by("A2", [TorusPoint.parse("1/2,0")])
    with pytest.raises(DomainError):
        CenterSubgroup.generated_by("A2", [TorusPoint.parse("1/3")])


def test_pgl3_lattice():
    lat = character_lattice(center_subgroup("A2"))
    assert lat.congruences == (((1, 2), 3),)
    assert (1, 1) in lat and (3, 0) in lat and (1, 0) not in lat
    assert str(lat) == "m1 + 2*m2 = 0 mod 3"


def test_trivial_lattice():
    lat = character_lattice(CenterSubgroup.trivial("B3"))
    assert lat.congruences == () and (1, 0, 1) in lat
    assert str(lat) == "Z^3"


SMALL = ["A1", "A2", "A3", "B2", "C3", "D4", "D5", "A1xA1", "A1xA3", "E6"]


@pytest.mark.parametrize("name", SMALL)
def test_lattice_contains_roots_and_has_index_z(name):
    for z in subgroups(center_subgroup(name)):
        lat = character_lattice(z)
        rd = root_datum(name)
        assert all(a in lat for a in rd.simple_roots)
        e = max(z.exponent, 1)
        box = sum(1 for m in product(range(e), repeat=rd.rank) if m in lat)
        assert box * z.order == e**rd.rank


@st.composite
def subgroup_and_weight(draw):
    name = draw(st.sampled_from(SMALL))
    z = draw(st.sampled_from(subgroups(center_subgroup(name))))
    lam = tuple(draw(st.lists(st.integers(-6, 6), min_size=z.rank, max_size=z.rank)))
    return z, lam


@settings(max_examples=300, deadline=None)
@given(subgroup_and_weight())
def test_lattice_is_annihilator_of_z(zl):
    z, lam = zl
    assert (lam in character_lattice(z)) == all(pairing(c, lam) == 0 for c in z.elements)


def test_cross_section_truth_table():
    pgl2 = center_subgroup("A1")
    assert cross_section_exists(CenterSubgroup.trivial("E6"), 0)
    assert cross_section_exists(CenterSubgroup.trivial("A1"), 5)
    assert not cross_section_exists(pgl2, 0)
    assert cross_section_exists(pgl2, 2)
    assert not cross_section_exists(pgl2, 3)
    assert cross_section_exists(center_subgroup("E6"), 3)
    for bad in (-1, 1, 4, 9):
        with pytest.raises(ValueError):
            cross_section_exists(pgl2, bad)


def test_full_center_and_kernel():
    d4 = center_subgroup("D4")
    assert is_full_center(d4)
    k = d4.kernel_of((1, 0, 0, 0))
    assert k.order == 2 and not is_full_center(k)
    assert all(pairing(c, (1, 0, 0, 0)) == 0 for c in k.elements)


def test_split_detection():
    full = center_subgroup("A1xA1")
    diag = CenterSubgroup.generated_by("A1xA1", [TorusPoint.parse("1/2,1/2")])
    assert full.splits() and not diag.splits()
    assert [p.order for p in diag.factor_parts()] == [1, 1]
