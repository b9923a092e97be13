import itertools
import random
from fractions import Fraction

import pytest

from nonassoc.algebra import multiply
from nonassoc.corpus import split_octonions
from nonassoc.properties import check_property
from nonassoc.scalar import GaussianRational, I, ONE, solve_exact
from nonassoc.zorn import (
    ZornMatrix,
    from_zorn,
    to_zorn,
    unit_vec3,
    verify_spin_commutators,
    verify_spin_decomposition,
    verify_zorn_isomorphism,
    zorn_multiply,
    zorn_octonions,
)


@pytest.fixture(scope="module")
def splitO():
    return split_octonions()


def random_zorn(rng):
    return ZornMatrix.build(
        rng.randint(-3, 3),
        tuple(rng.randint(-3, 3) for _ in range(3)),
        tuple(rng.randint(-3, 3) for _ in range(3)),
        rng.randint(-3, 3),
    )


def test_identity_matrix_is_neutral():
    rng = random.Random(3)
    e = ZornMatrix.identity()
    for _ in range(20):
        z = random_zorn(rng)
        assert zorn_multiply(e, z) == z
        assert zorn_multiply(z, e) == z


def test_block_product_formula():
    # one fully generic pair against a by-hand expansion of the block rule
    A = ZornMatrix.build(2, (1, 0, -1), (0, 3, 1), -1)
    B = ZornMatrix.build(1, (0, 2, 0), (1, 1, -2), 3)
    got = zorn_multiply(A, B)
    # a*c + x.v = 2 + (1*1 + 0*1 + (-1)(-2)) = 5
    assert got.a == GaussianRational(5)
    # b*d + y.u = -3 + (0*0 + 3*2 + 1*0) = 3
    assert got.b == GaussianRational(3)
    # a*u + d*x - y X v ; y X v = (3*(-2)-1*1, 1*1-0*(-2), 0*1-3*1) = (-7, 1, -3)
    assert got.x == (GaussianRational(10), GaussianRational(3), GaussianRational(0))
    # c*y + b*v + x X u ; x X u = (0*0-(-1)*2, (-1)*0-1*0, 1*2-0*0) = (2, 0, 2)
    assert got.y == (GaussianRational(1), GaussianRational(2), GaussianRational(5))


def test_basis_images(splitO):
    q = splitO.basis()
    assert to_zorn(splitO.one()) == ZornMatrix.identity()
    assert to_zorn(q[6]) == ZornMatrix.build(-1, (0, 0, 0), (0, 0, 0), 1)
    assert to_zorn(q[0]) == ZornMatrix.build(0, (-1, 0, 0), (1, 0, 0), 0)
    assert to_zorn(q[3]) == ZornMatrix.build(0, (1, 0, 0), (1, 0, 0), 0)
    # linearity: q1 + q4 has a cancelling upper slot
    assert to_zorn(q[0] + q[3]) == ZornMatrix.build(0, (0, 0, 0), (2, 0, 0), 0)
    assert to_zorn(splitO.zero()) == ZornMatrix.zero()


def test_zorn_products_of_images(splitO):
    q = splitO.basis()
    assert zorn_multiply(to_zorn(q[0]), to_zorn(q[1])) == to_zorn(q[2])
    assert zorn_multiply(to_zorn(q[3]), to_zorn(q[3])) == ZornMatrix.identity()


def test_from_zorn_matches_linear_solve_oracle(splitO):
    # oracle: express a Zorn matrix over the eight basis images by solving
    # the 8x8 linear system in the (a, x, y, b) coordinates
    images = [to_zorn(splitO.one())] + [to_zorn(b) for b in splitO.basis()]

    def coords(z):
        return [z.a, *z.x, *z.y, z.b]

    rng = random.Random(9)
    for _ in range(10):
        z = random_zorn(rng)
        rows = [[coords(img)[r] for img in images] for r in range(8)]
        sol, _ = solve_exact(rows, coords(z))
        assert sol is not None
        expected = splitO.element(sol[0], sol[1:])
        assert from_zorn(z) == expected


def test_from_zorn_examples(splitO):
    q = splitO.basis()
    assert from_zorn(ZornMatrix.identity()) == splitO.one()
    assert from_zorn(ZornMatrix.zero()) == splitO.zero()
    z = ZornMatrix.build(0, unit_vec3(1), tuple(-v for v in unit_vec3(1)), 0)
    assert from_zorn(z) == -q[1]  # (0, e2; -e2, 0) = -q2


def test_round_trips(splitO):
    rng = random.Random(10)
    for _ in range(100):
        s = splitO.random_element(rng)
        assert from_zorn(to_zorn(s)) == s
    for _ in range(100):
        z = random_zorn(rng)
        assert to_zorn(from_zorn(z)) == z


def test_isomorphism_verdict(splitO):
    report = verify_zorn_isomorphism()
    assert not report.holds
    assert "36 of 64" in report.detail
    # first mismatch: q1*q4 is -q7 in the table, +q7 through the matrices
    q = splitO.basis()
    assert report.witness.elements == (q[0], q[3])
    assert report.witness.defect == q[6].scaled(2)
    # every mismatch is a pure sign flip
    elems = [splitO.one()] + splitO.basis()
    flips = 0
    for u, v in itertools.product(elems, repeat=2):
        table_side = multiply(u, v)
        zorn_side = from_zorn(zorn_multiply(to_zorn(u), to_zorn(v)))
        if table_side != zorn_side:
            flips += 1
            assert zorn_side == -table_side
    assert flips == 36


def test_spin_commutators():
    report = verify_spin_commutators()
    assert report.pauli_side_holds
    assert not report.printed_relation_holds  # right side needs a factor i
    assert report.measured_factor == I


def test_spin_commutator_defect_value(splitO):
    from nonassoc.algebra import commutator

    q = splitO.basis()
    half_i = I * Fraction(1, 2)
    lhs = commutator(q[0].scaled(half_i), q[1].scaled(half_i))
    assert lhs == q[2].scaled(I * half_i)        # i * eps_123 * (i/2) q3
    assert lhs != q[2].scaled(half_i)            # the stated right side


def test_spin_decomposition():
    report = verify_spin_decomposition()
    assert report.product_decomposition_holds
    assert report.bracket_constant_uniform
    assert report.bracket_constant == ONE        # lambda = 1


def test_to_zorn_rejects_foreign_elements():
    from nonassoc.corpus import quaternions

    with pytest.raises(ValueError):
        to_zorn(quaternions().basis_element(0))


def test_zorn_octonions_table_properties():
    zo = zorn_octonions()
    assert check_property(zo, "alternative").holds
    assert check_property(zo, "flexible").holds
    assert not check_property(zo, "associative").holds
    # the derived table flips the bracket sign of the split sector
    q = zo.basis()
    from nonassoc.algebra import commutator

    assert commutator(q[3], q[4]) == q[2].scaled(2)   # +2 q3, not -2 q3
    assert commutator(q[0], q[1]) == q[2].scaled(2)   # quaternion sector agrees


def test_zorn_scalar_coefficients_survive():
    splitO = split_octonions()
    s = splitO.element(GaussianRational(1, 2), [Fraction(1, 3), 0, 0, 2, 0, 0, GaussianRational(0, -1)])
    assert from_zorn(to_zorn(s)) == s
