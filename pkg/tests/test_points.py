"""Point schemes: strata, PI degrees, and the closed-point census."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcy.cyclo import RootScalar
from qcy.errors import HypothesisViolation, InternalDefect
from qcy.points import (
    INFINITE,
    admissible_supports,
    census_weighted_surface,
    chart_simple_count,
    classify_two_var,
    is_special,
    max_stratum_dimension,
    multilinearize,
    multilinearize_word,
    pi_degree,
    point_scheme_dim_product,
    stratum_dimension,
    two_var_fermat_count,
    word_of_monomial,
)
from qcy.qalgebra import AlgebraSpec, SkewPoly, fermat, multiply

from helpers import SPEC3, SPEC4, antisymmetric


# -- multilinearization -----------------------------------------------------


def test_word_of_monomial():
    assert word_of_monomial((2, 0, 1)) == (0, 0, 2)
    assert word_of_monomial((0, 0, 0)) == ()


def test_multilinearize_keeps_coefficients():
    spec = AlgebraSpec.unweighted(2, antisymmetric(2, (1,)))
    x0 = SkewPoly.gen(2, 2, 0)
    x1 = SkewPoly.gen(2, 2, 1)
    p = multiply(x0 + x1, x0 - x1, spec)
    m = multilinearize(p)
    assert m.nslots == 2
    values = {(0, 0): 1, (0, 1): -2, (1, 1): -1}
    for word, c in values.items():
        assert m.terms[word].evaluate_mod(1, 101) % 101 == c % 101


def test_multilinearize_rejects_inhomogeneous():
    p = SkewPoly.gen(3, 2, 0) + SkewPoly.monomial(3, (1, 1))
    with pytest.raises(ValueError):
        multilinearize(p)


def test_concat_joins_slot_windows():
    a = multilinearize_word(3, (0, 1))
    b = multilinearize_word(3, (2,))
    joined = a.concat(b)
    assert joined.nslots == 3
    assert set(joined.terms) == {(0, 1, 2)}


def test_multilinear_window_factorization():
    """Degree d + e words split as degree-d windows times degree-e windows."""
    spec = SPEC3
    x = [SkewPoly.gen(3, 3, i) for i in range(3)]
    p = multiply(x[0], x[1], spec)  # degree 2
    r = x[2]
    joined = multilinearize(p).concat(multilinearize(r))
    direct = multilinearize(multiply(p, r, spec))
    assert joined == direct


def test_evaluate_constant_sums_terms():
    # same point (1, 1, 0) in every slot
    m = multilinearize_word(3, (0, 1)) + multilinearize_word(3, (1, 0))
    value = m.evaluate_constant((1, 1, 0))
    assert value.evaluate_mod(1, 101) == 2
    zero = m.evaluate_constant((1, 0, 1))
    assert zero.is_zero()


# -- special parameters and torus strata ------------------------------------


def test_special_detects_trivial_triple_cocycles():
    assert is_special(SPEC3)
    assert not is_special(SPEC4)
    commutative = AlgebraSpec.unweighted(4, antisymmetric(4, (0, 0, 0)))
    assert is_special(commutative)


def test_admissible_supports_of_general_matrix():
    # every triple cocycle of SPEC4 is nontrivial, so only the 1-skeleton
    got = admissible_supports(SPEC4)
    assert got == [
        (0,), (1,), (2,), (3,),
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_admissible_supports_of_special_matrix():
    got = admissible_supports(SPEC3)
    assert (0, 1, 2) in got
    assert len(got) == 7


@st.composite
def random_specs(draw):
    n = draw(st.integers(2, 5))
    order = draw(st.integers(1, 6))
    entries = [draw(st.integers(0, order - 1))
               for _ in range(n * (n - 1) // 2)]
    return AlgebraSpec.unweighted(order, antisymmetric(order, entries))


@given(random_specs())
@settings(max_examples=400, deadline=None)
def test_admissible_supports_are_downward_closed(spec):
    got = set(admissible_supports(spec))
    for i in range(spec.nvars):
        assert (i,) in got
    for s in got:
        for drop in range(len(s)):
            sub = s[:drop] + s[drop + 1:]
            if sub:
                assert sub in got
    # a support is admissible iff all its triples have trivial cocycle
    for s in got:
        for a in range(len(s)):
            for b in range(a + 1, len(s)):
                for c in range(b + 1, len(s)):
                    i, j, k = s[a], s[b], s[c]
                    e = (spec.exponents[i][j] + spec.exponents[j][k]
                         + spec.exponents[k][i]) % spec.order
                    assert e == 0


def test_stratum_dimensions():
    h = (6, 6, 3, 3)
    assert stratum_dimension((0,), h, False) == 0
    assert stratum_dimension((0,), h, True) is None
    assert stratum_dimension((0, 1), h, True) == 0
    assert stratum_dimension((0, 1, 2), h, True) == 1
    with pytest.raises(ValueError):
        stratum_dimension((), h, False)


def test_max_stratum_dimension_of_running_example():
    assert max_stratum_dimension(SPEC4) == 0


def test_max_stratum_dimension_needs_divisibility():
    spec = AlgebraSpec(weights=(1, 1, 3), order=2,
                       exponents=antisymmetric(2, (0, 0, 0)))
    with pytest.raises(HypothesisViolation):
        max_stratum_dimension(spec)


# -- product point schemes --------------------------------------------------

SEGRE_A = AlgebraSpec.unweighted(2, (
    (0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0)))
SEGRE_B = AlgebraSpec.unweighted(2, ((0, 0, 0), (0, 0, 0), (0, 0, 0)))


def test_product_dimension_general_parameters():
    assert point_scheme_dim_product(SEGRE_A, SEGRE_B) == 1


def test_product_dimension_commutative_specialization():
    a = AlgebraSpec.unweighted(2, tuple(tuple(0 for _ in range(4))
                                        for _ in range(4)))
    assert point_scheme_dim_product(a, SEGRE_B) == 3


def test_product_dimension_mixed_equation():
    assert point_scheme_dim_product(SEGRE_A, SEGRE_B, "fermat", "mixed") == 1


def test_product_dimension_no_equations():
    assert point_scheme_dim_product(SEGRE_A, SEGRE_B, None, None) == 3


def test_product_dimension_rejects_unknown_shape():
    with pytest.raises(ValueError):
        point_scheme_dim_product(SEGRE_A, SEGRE_B, "cubic", None)


# -- PI degree --------------------------------------------------------------


def test_pi_degree_of_chart_matrix():
    assert pi_degree(SPEC3) == 3


def test_pi_degree_of_commutative_is_one():
    spec = AlgebraSpec.unweighted(3, antisymmetric(3, (0, 0, 0)))
    assert pi_degree(spec) == 1


def test_pi_degree_of_quantum_plane():
    # x y = zeta_5 y x: image of the exponent matrix has 25 vectors
    spec = AlgebraSpec.unweighted(5, antisymmetric(5, (1,)))
    assert pi_degree(spec) == 5


# -- two-variable quotients -------------------------------------------------


def test_classify_two_var_shift_classes():
    cls = classify_two_var(2, 2)
    assert (cls.axis_x_shifts, cls.axis_y_shifts, cls.family_shifts) == (2, 2, 2)
    cls = classify_two_var(1, 3)
    assert (cls.axis_x_shifts, cls.axis_y_shifts, cls.family_shifts) == (3, 1, 1)


def test_two_var_fermat_counts():
    assert two_var_fermat_count(2, 2, 6).count == 6  # 3 factors x 2 shifts
    assert two_var_fermat_count(1, 3, 6).count == 2  # 2 factors x 1 shift
    assert two_var_fermat_count(1, 1, 4).count == 4
    assert two_var_fermat_count(4, 6, 12).count == 2  # 1 factor x 2 shifts
    with pytest.raises(ValueError):
        two_var_fermat_count(2, 3, 8)  # lcm(2,3) does not divide 8


# -- chart counts and the census --------------------------------------------


def test_chart_simple_count_all_nontrivial():
    result = chart_simple_count(SPEC3, (6, 3, 3))
    assert result.count == 12
    assert [(i.support, i.count) for i in result.items] == [
        ((0,), 6), ((1,), 3), ((2,), 3)]
    assert result.trivial_pairs == ()


def test_chart_simple_count_trivial_pair_is_infinite():
    commutative = AlgebraSpec.unweighted(3, antisymmetric(3, (0, 0, 0)))
    result = chart_simple_count(commutative, (6, 3, 3))
    assert result.count is INFINITE
    assert len(result.trivial_pairs) == 3


def test_census_of_running_example():
    report = census_weighted_surface(SPEC4)
    assert report.total == 24
    assert [c.count for c in report.charts] == [12, 6, 6]
    assert report.charts[0].description == "x0 inverted"
    assert [(i.support, i.count) for i in report.charts[0].items] == [
        ((1,), 6), ((2,), 3), ((3,), 3)]
    assert [(i.support, i.count) for i in report.charts[1].items] == [
        ((2,), 3), ((3,), 3)]
    assert report.charts[2].items[0].count == 6


def test_census_of_commutative_surface_is_infinite():
    spec = AlgebraSpec(weights=(1, 1, 2, 2), order=3,
                       exponents=antisymmetric(3, (0, 0, 0, 0, 0, 0)))
    report = census_weighted_surface(spec)
    assert report.total is INFINITE
    assert report.charts[0].count is INFINITE


def test_census_requires_surface_shape():
    with pytest.raises(ValueError):
        census_weighted_surface(SPEC3)
    spec = AlgebraSpec(weights=(1, 2, 2, 1), order=3,
                       exponents=antisymmetric(3, (0,) * 6))
    with pytest.raises(ValueError):
        census_weighted_surface(spec)


def test_census_rejects_invalid_spec():
    broken = AlgebraSpec(weights=(1, 1, 2, 2), order=3,
                         exponents=((0, 1, 0, 0), (1, 0, 0, 0),
                                    (0, 0, 0, 0), (0, 0, 0, 0)))
    with pytest.raises(HypothesisViolation):
        census_weighted_surface(broken)


@given(st.integers(1, 12), st.integers(1, 12))
@settings(max_examples=1000, deadline=None)
def test_census_identity_for_surface_weights(a, b):
    """d + 2d/a + 2d/b + d g^2/(ab) = 24 exactly on the five systems."""
    weights = tuple(sorted((1, 1, a, b)))
    d = sum(weights)
    a, b = weights[2], weights[3]
    g = gcd(a, b)
    divisible = d % a == 0 and d % b == 0
    total = Fraction(d) + 2 * Fraction(d, a) + 2 * Fraction(d, b) \
        + Fraction(d * g * g, a * b)
    in_family = weights in {(1, 1, 1, 1), (1, 1, 1, 3), (1, 1, 2, 2),
                            (1, 1, 2, 4), (1, 1, 4, 6)}
    assert (divisible and total == 24) == in_family
    if in_family:
        assert total.denominator == 1
