"""Exact root-of-unity arithmetic and integer lattice routines.

The lattice routines are checked against brute-force set oracles, and the
congruence solver against exhaustive search over the full period.
"""

import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcy.cyclo import (
    CongruenceSystem,
    CycField,
    CycInt,
    RootScalar,
    cyclotomic_poly,
    hermite_normal_form,
    image_size,
    kernel_lattice,
    lattice_contains,
    smith_normal_form,
    solve_root_system,
)
from qcy.errors import OrderMismatchError


# -- RootScalar -------------------------------------------------------------


def test_root_scalar_reduction():
    assert RootScalar(6, 2).pair() == (3, 1)
    assert RootScalar(6, 0).pair() == (1, 0)
    assert RootScalar(4, 2).pair() == (2, 1)
    assert RootScalar(1, 0).pair() == (1, 0)


def test_root_scalar_products_cross_order():
    a = RootScalar(4, 1)
    b = RootScalar(6, 1)
    assert (a * b).pair() == (12, 5)
    assert (a * a.inverse()).is_one()
    assert (b ** 6).is_one()
    assert (b ** -1).pair() == b.inverse().pair()


def test_root_scalar_equality_ignores_presentation():
    assert RootScalar(6, 2) == RootScalar(3, 1)
    assert hash(RootScalar(6, 2)) == hash(RootScalar(3, 1))
    assert RootScalar(6, 2) != RootScalar(6, 1)


def test_rescale_requires_divisible_target():
    r = RootScalar(6, 2)
    assert r.rescale(6).exponent == 2
    assert r.rescale(12).exponent == 4
    with pytest.raises(OrderMismatchError):
        r.rescale(4)
    with pytest.raises(OrderMismatchError):
        RootScalar(6, 2).reduced().rescale(2)


def test_root_scalar_is_immutable():
    r = RootScalar(3, 1)
    with pytest.raises(AttributeError):
        r.exponent = 2


@given(st.integers(1, 30), st.integers(-60, 60), st.integers(1, 30),
       st.integers(-60, 60))
@settings(max_examples=300)
def test_root_scalar_group_laws(n1, e1, n2, e2):
    a, b = RootScalar(n1, e1), RootScalar(n2, e2)
    assert (a * b) == (b * a)
    assert (a * b) * a.inverse() == b
    assert ((a * b) ** 3) == (a ** 3) * (b ** 3)


# -- cyclotomic polynomials and CycInt --------------------------------------


def test_cyclotomic_poly_small_orders():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_degree_is_totient():
    def phi(n):
        return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) - 1 == phi(n)


def test_cycint_root_relations():
    # 1 + zeta_3 + zeta_3^2 = 0
    z = RootScalar(3, 1)
    total = CycInt.from_int(3, 1) + CycInt.from_root(z) + CycInt.from_root(z * z)
    assert total.is_zero()
    # zeta_6 = 1 + zeta_6^4 (since zeta_6^2 - zeta_6 + 1 = 0 gives x = 1 + x^-1... )
    z6 = CycInt.from_root(RootScalar(6, 1))
    assert z6 * z6 * z6 == CycInt.from_int(6, -1)


def test_cycint_mixed_multiplication():
    z = CycInt.from_root(RootScalar(4, 1))
    assert z * 2 + z == z * 3
    assert z * RootScalar(4, 1) == CycInt.from_int(4, -1)
    assert (z - z).is_zero()
    assert not (z + z).is_zero()


def test_cycint_evaluate_mod():
    # order 4 over p = 13: i -> 5 or 8 (5^2 = 25 = -1 mod 13)
    z = CycInt.from_root(RootScalar(4, 1))
    assert (z * z).evaluate_mod(5, 13) == 12
    three = CycInt.from_int(4, 3)
    assert three.evaluate_mod(5, 13) == 3


# -- congruences ------------------------------------------------------------


def brute_solutions(system):
    return [x for x in range(system.modulus)
            if all((a * x - b) % system.modulus == 0
                   for a, b in zip(system.coeffs, system.rhs))]


@given(st.integers(1, 40), st.lists(
    st.tuples(st.integers(0, 39), st.integers(0, 39)), min_size=0, max_size=4))
@settings(max_examples=500)
def test_congruence_solver_against_brute_force(modulus, pairs):
    coeffs = tuple(a % modulus for a, _ in pairs)
    rhs = tuple(b % modulus for _, b in pairs)
    system = CongruenceSystem(modulus, coeffs, rhs)
    sols = brute_solutions(system)
    got = system.solve()
    if got is None:
        assert sols == []
    else:
        assert got in sols
        assert system.is_solution(got)


def test_solve_root_system_known_values():
    # c^1 = zeta_3, c^2 = zeta_3^2 has c = zeta_3
    r = solve_root_system([(1, RootScalar(3, 1)), (2, RootScalar(3, 2))])
    assert r is not None and r.pair() == (3, 1)
    # c^1 = zeta_3 and c^1 = zeta_3^2 is contradictory
    assert solve_root_system(
        [(1, RootScalar(3, 1)), (1, RootScalar(3, 2))]) is None
    # empty system: the trivial root
    assert solve_root_system([]).is_one()


def test_solve_root_system_rejects_bad_exponents():
    with pytest.raises(ValueError):
        solve_root_system([(0, RootScalar(3, 1))])


@st.composite
def root_systems(draw):
    order = draw(st.integers(1, 12))
    n = draw(st.integers(1, 4))
    exps = [draw(st.integers(1, 6)) for _ in range(n)]
    rhs = [RootScalar(order, draw(st.integers(0, order - 1))) for _ in range(n)]
    return list(zip(exps, rhs))


@given(root_systems())
@settings(max_examples=1000, deadline=None)
def test_solve_root_system_roundtrip_and_refutation(pairs):
    root = solve_root_system(pairs)
    period = math.lcm(*(r.order for _, r in pairs),
                      *(a for a, _ in pairs))
    if root is not None:
        for a, rhs in pairs:
            assert (root ** a) == rhs
    else:
        # exhaustive refutation over one full period of candidate orders
        assert period <= 10 ** 4
        for k in range(period):
            c = RootScalar(period, k)
            assert any((c ** a) != rhs for a, rhs in pairs)


# -- Smith and Hermite forms ------------------------------------------------


def random_matrix(rng, n, m, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]


def test_smith_normal_form_divisibility_chain(rng):
    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        mat = random_matrix(rng, n, m)
        diag, v = smith_normal_form(mat)
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            if b != 0:
                assert a != 0 and b % a == 0
        # V is unimodular
        assert abs(_det(v)) == 1


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det(sub)
    return total


def test_hermite_form_is_canonical(rng):
    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        rows = random_matrix(rng, n, m)
        h = hermite_normal_form(rows)
        # pivots positive, entries above each pivot reduced
        pivots = []
        for row in h:
            nz = [j for j, x in enumerate(row) if x != 0]
            assert nz, "zero rows are dropped"
            pivots.append(nz[0])
            assert row[nz[0]] > 0
        assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
        for i, row in enumerate(h):
            for k in range(i):
                assert 0 <= h[k][pivots[i]] < row[pivots[i]]
        # idempotent and membership-stable
        assert hermite_normal_form(h) == h
        for row in rows:
            assert lattice_contains(h, row)


def test_lattice_contains_brute_force(rng):
    for _ in range(40):
        m = rng.randint(1, 3)
        basis = hermite_normal_form(random_matrix(rng, rng.randint(1, 3), m))
        if not basis:
            continue
        span = set()
        for coeffs in product(range(-3, 4), repeat=len(basis)):
            v = tuple(sum(c * row[j] for c, row in zip(coeffs, basis))
                      for j in range(m))
            span.add(v)
        for v in span:
            if all(abs(x) <= 5 for x in v):
                assert lattice_contains(basis, list(v))
        for _ in range(20):
            v = [rng.randint(-5, 5) for _ in range(m)]
            claimed = lattice_contains(basis, v)
            if tuple(v) in span:
                assert claimed


# -- kernels and image sizes ------------------------------------------------


def kernel_brute(mat, modulus):
    n = len(mat)
    m = len(mat[0]) if n else 0
    out = set()
    for vec in product(range(modulus), repeat=m):
        if all(sum(row[j] * vec[j] for j in range(m)) % modulus == 0
               for row in mat):
            out.add(vec)
    return out


def image_brute(mat, modulus):
    n = len(mat)
    m = len(mat[0]) if n else 0
    out = set()
    for vec in product(range(modulus), repeat=m):
        out.add(tuple(sum(row[j] * vec[j] for j in range(m)) % modulus
                      for row in mat))
    return out


@given(st.integers(2, 6), st.integers(1, 3), st.integers(1, 3),
       st.data())
@settings(max_examples=300, deadline=None)
def test_kernel_and_image_against_enumeration(modulus, n, m, data):
    mat = [[data.draw(st.integers(0, modulus - 1)) for _ in range(m)]
           for _ in range(n)]
    basis = kernel_lattice(mat, modulus)
    expected = kernel_brute(mat, modulus)
    # every enumerated kernel vector lies in the lattice, and conversely
    # every basis row reduced mod modulus is a kernel vector
    got = set()
    for coeffs in product(range(modulus), repeat=len(basis)):
        v = tuple(sum(c * row[j] for c, row in zip(coeffs, basis)) % modulus
                  for j in range(m))
        got.add(v)
    assert got == expected
    assert image_size(mat, modulus) == len(image_brute(mat, modulus))
    # kernel/image duality over Z/modulus
    assert image_size(mat, modulus) * len(expected) == modulus ** m


def test_image_size_routes_agree(rng):
    for _ in range(40):
        modulus = rng.randint(2, 7)
        n = rng.randint(1, 3)
        mat = random_matrix(rng, n, n, 0, modulus - 1)
        a = image_size(mat, modulus, method="snf")
        b = image_size(mat, modulus, method="enumerate")
        assert a == b
        assert image_size(mat, modulus, method="auto") == a


def test_image_size_known_values():
    assert image_size([[0, 2, 1], [1, 0, 2], [2, 1, 0]], 3) == 9
    assert image_size([[0, 0], [0, 0]], 5) == 1
    assert image_size([[1, 0], [0, 1]], 6) == 36


# -- cyclotomic field -------------------------------------------------------


def test_cycfield_inverse():
    field = CycField(5)
    z = field.from_cycint(CycInt.from_root(RootScalar(5, 1)))
    one = field.from_cycint(CycInt.from_int(5, 1))
    x = field.sub(z, field.from_cycint(CycInt.from_int(5, 3)))
    inv = field.inv(x)
    assert field.mul(x, inv) == one
    with pytest.raises(ZeroDivisionError):
        field.inv(field.zero())


def test_cycfield_matches_rational_arithmetic():
    field = CycField(1)
    a = field.from_cycint(CycInt.from_int(1, 7))
    b = field.from_cycint(CycInt.from_int(1, -3))
    assert field.mul(a, field.inv(b)) == (Fraction(-7, 3),)
