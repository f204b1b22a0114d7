import cmath

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from adjquot.centerlattice import center_subgroup
from adjquot.charring import (
    RepElement,
    SymElement,
    decompose_into_irreducibles,
    evaluate,
    express_in_hilbert_generators,
    irreducible_character,
    is_sharp,
    multiply,
    one,
    orbit_sum,
    power,
    tensor_product,
    weight_multiplicities,
    weyl_dimension,
)
from adjquot.errors import DomainError, GuardExceeded, NotInLatticeError
from adjquot.groups import GroupSpec
from adjquot.linalg import determinant
from adjquot.rootdata import dominance_leq, root_datum, weyl_group_matrices

SMALL = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"]


def small_dominant(rank, top=3):
    return st.lists(st.integers(0, top), min_size=rank, max_size=rank).map(tuple)


@st.composite
def rd_and_weight(draw, top=3, names=SMALL):
    rd = root_datum(draw(st.sampled_from(names)))
    return rd, draw(small_dominant(rd.rank, top))


# -- independent oracle: Weyl character formula evaluated numerically ---------


def weyl_formula_value(rd, lam, q):
    def z(nu):
        return cmath.exp(2j * cmath.pi * sum(a * b for a, b in zip(q, nu)))

    lr = tuple(a + b for a, b in zip(lam, rd.rho))
    num = den = 0
    for p in weyl_group_matrices(rd):
        sign = determinant(p)
        num += sign * z(tuple(sum(row[j] * lr[j] for j in range(rd.rank)) for row in p))
        den += sign * z(tuple(sum(row[j] * rd.rho[j] for j in range(rd.rank)) for row in p))
    return num, den


def character_value(ch: SymElement, q):
    return sum(c * cmath.exp(2j * cmath.pi * sum(a * b for a, b in zip(q, nu))) for nu, c in ch.expand().items())


@settings(max_examples=60, deadline=None)
@given(rd_and_weight(), st.randoms(use_true_random=False))
def test_character_matches_weyl_formula(rw, rnd):
    rd, lam = rw
    q = [rnd.random() for _ in range(rd.rank)]
    num, den = weyl_formula_value(rd, lam, q)
    assume(abs(den) > 1e-3)  # skip points on a wall, where the formula is 0/0
    assert abs(character_value(irreducible_character(rd, lam), q) - num / den) < 1e-6


@settings(max_examples=80, deadline=None)
@given(rd_and_weight())
def test_dimension_matches_weyl(rw):
    rd, lam = rw
    assert irreducible_character(rd, lam).augmentation() == weyl_dimension(rd, lam)


@pytest.mark.parametrize(
    "name,lam,dim",
    [("E6", (1, 0, 0, 0, 0, 0), 27), ("E6", (0, 1, 0, 0, 0, 0), 78), ("F4", (0, 0, 0, 1), 26), ("G2", (1, 0), 7), ("D4", (0, 1, 0, 0), 28)],
)
def test_known_dimensions(name, lam, dim):
    rd = root_datum(name)
    assert irreducible_character(rd, lam).augmentation() == dim == weyl_dimension(rd, lam)


def test_adjoint_multiplicities():
    rd = root_datum("A2")
    assert irreducible_character(rd, (1, 1)) == SymElement(rd, {(1, 1): 1, (0, 0): 2})
    assert weight_multiplicities(root_datum("G2"), (0, 1))[(0, 0)] == 2


def test_orbit_sum_and_one():
    rd = root_datum("A2")
    assert orbit_sum(rd, (1, 0)).augmentation() == 3
    assert one(rd).augmentation() == 1
    with pytest.raises(DomainError):
        orbit_sum(rd, (1, -1))
    with pytest.raises(DomainError):
        SymElement(rd, {(-1, 0): 1})


def test_multiply_examples():
    a1 = root_datum("A1")
    s1 = orbit_sum(a1, (1,))
    assert multiply(s1, s1) == SymElement(a1, {(2,): 1, (0,): 2})
    assert s1 * s1 == power(s1, 2)
    a2 = root_datum("A2")
    x = multiply(irreducible_character(a2, (1, 0)), irreducible_character(a2, (0, 1)))
    assert decompose_into_irreducibles(x) == RepElement(a2, {(1, 1): 1, (0, 0): 1})


def test_eight_times_eight():
    rd = root_datum("A2")
    rep = tensor_product(rd, (1, 1), (1, 1))
    assert rep == RepElement(rd, {(2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1})
    assert rep.dimension() == 64 and rep.is_actual()


def test_decompose_orbit_sum_is_virtual():
    a1 = root_datum("A1")
    rep = decompose_into_irreducibles(orbit_sum(a1, (2,)))
    assert rep == RepElement(a1, {(2,): 1, (0,): -1})
    assert not rep.is_actual()
    assert rep.character() == orbit_sum(a1, (2,))


def test_sharpness_examples():
    a2 = root_datum("A2")
    assert is_sharp(orbit_sum(a2, (1, 0)), (1, 0))
    assert is_sharp(irreducible_character(a2, (2, 1)), (2, 1))
    assert not is_sharp(orbit_sum(a2, (1, 0)) + orbit_sum(a2, (0, 1)), (1, 0))
    assert not is_sharp(2 * orbit_sum(a2, (1, 0)), (1, 0))


def test_rank_guard():
    e7 = root_datum("E7")
    with pytest.raises(GuardExceeded):
        irreducible_character(e7, (1, 0, 0, 0, 0, 0, 0))
    assert irreducible_character(e7, (0, 0, 0, 0, 0, 0, 1), max_rank=7).augmentation() == 56


@st.composite
def sym_elements(draw, rd):
    keys = draw(st.lists(small_dominant(rd.rank, 2), max_size=3))
    return SymElement(rd, {k: draw(st.integers(-3, 3)) for k in keys})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A1", "A2", "B2"]), st.data())
def test_ring_laws(name, data):
    rd = root_datum(name)
    x, y, z = (data.draw(sym_elements(rd)) for _ in range(3))
    assert multiply(x, y) == multiply(y, x)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, y + z) == multiply(x, y) + multiply(x, z)
    assert multiply(x, one(rd)) == x


@settings(max_examples=40, deadline=None)
@given(rd_and_weight(top=2), st.data())
def test_tensor_products_are_actual_with_right_dimension(rw, data):
    rd, lam = rw
    mu = data.draw(small_dominant(rd.rank, 2))
    rep = tensor_product(rd, lam, mu)
    assert rep.is_actual()
    assert rep.dimension() == weyl_dimension(rd, lam) * weyl_dimension(rd, mu)
    top = tuple(a + b for a, b in zip(lam, mu))
    assert rep.mults.get(top) == 1


@settings(max_examples=60, deadline=None)
@given(rd_and_weight())
def test_round_trip(rw):
    rd, lam = rw
    assert decompose_into_irreducibles(irreducible_character(rd, lam)) == RepElement(rd, {lam: 1})


@settings(max_examples=60, deadline=None)
@given(rd_and_weight(), st.data())
def test_sharpness_properties(rw, data):
    rd, lam = rw
    mu = data.draw(small_dominant(rd.rank, 2))
    chl, chm = irreducible_character(rd, lam), irreducible_character(rd, mu)
    assert is_sharp(chl, lam) and is_sharp(orbit_sum(rd, lam), lam)
    top = tuple(a + b for a, b in zip(lam, mu))
    assert is_sharp(multiply(chl, orbit_sum(rd, mu)), top)
    assert is_sharp(multiply(chl, chm), top)


@settings(max_examples=60, deadline=None)
@given(rd_and_weight())
def test_support_in_root_coset_below_lambda(rw):
    rd, lam = rw
    for mu in irreducible_character(rd, lam).coeffs:
        diff = tuple(a - b for a, b in zip(lam, mu))
        assert all(c.denominator == 1 and c >= 0 for c in rd.to_root_coords(diff))
        assert dominance_leq(rd, mu, lam)


# -- certificates ----------------------------------------------------------


def certificate(spec, lam):
    g = GroupSpec.named(*spec.split())
    return express_in_hilbert_generators(root_datum(g.type), g.z, lam)


def test_certificate_pgl2():
    assert certificate("A1 adjoint", (4,)).render() == "X_(2)^2 - X_(2) - 1"


def test_certificate_pgl3():
    cert = certificate("A2 adjoint", (2, 2))
    assert cert.polynomial == {(2, 0, 0): 1, (0, 1, 0): -1, (0, 0, 1): -1, (1, 0, 0): -2, (0, 0, 0): -1}
    assert cert.generators == ((1, 1), (3, 0), (0, 3))


def test_certificate_of_generator_is_the_variable():
    cert = certificate("D4 halfspin", (1, 0, 1, 0))
    assert cert.render() == "X_(1,0,1,0)"


def test_certificate_errors():
    with pytest.raises(NotInLatticeError, match="mod 3"):
        certificate("A2 adjoint", (1, 0))
    with pytest.raises(DomainError):
        certificate("A2 adjoint", (-1, 2))
    with pytest.raises(GuardExceeded):
        certificate("A1 adjoint", (8,))


def test_certificate_evaluates_exactly():
    g = GroupSpec.named("B2", "so")
    rd = root_datum("B2")
    for lam in [(1, 2), (2, 2), (0, 4)]:
        cert = express_in_hilbert_generators(rd, g.z, lam)
        assert evaluate(rd, cert) == irreducible_character(rd, lam)


def test_certificates_for_split_product():
    rd = root_datum("A1xA1")
    z = center_subgroup("A1xA1")
    cert = express_in_hilbert_generators(rd, z, (2, 4))
    assert cert.polynomial == {(1, 2): 1, (1, 1): -1, (1, 0): -1}
