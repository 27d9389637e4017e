from fractions import Fraction

import pytest
from helpers import span, split_pair, split_triple

from src.errors import (
    DependentBasis,
    MembershipFailed,
    NotationError,
    NotDivisible,
    OutOfRange,
    RankMismatch,
    UnresolvedSingularity,
)
from src.exact_algebra import R, affine, linear_factor, monic, ratfunc, wronskian, x
from src.poly_spaces import (
    INFINITY,
    EvaluatedStratumData,
    PolySpace,
    SelfDuality,
    TPolynomials,
    affine_substitute,
    associated_T,
    auto_stratum_data,
    base_points,
    build_DX_factorized,
    divided_wronskian,
    dual_operator_identity_check,
    dual_space,
    dual_space_full,
    exponents_at,
    full_space,
    fundamental_operator,
    half_conjugate,
    miura_potential,
    miura_scalar_operator,
    parse_stratum_data,
    reduced_wronskian,
    selfdual_check,
    shift_by_roots,
    squaring_map,
    stratum_membership,
    verified_stratum_data,
    wronskian_of_space,
    y_from_basis,
)
from src.weights import Partition


def data(*items):
    return EvaluatedStratumData.of([(z, Partition(p)) for z, p in items])


def test_space_is_stored_in_canonical_form():
    assert span(3, x**2 + 1, 1) == span(3, 1, x**2)
    assert span(3, 1, x**2).degrees() == [0, 2]
    assert full_space(3) == span(3, 1, x, x**2)


def test_space_validation():
    with pytest.raises(DependentBasis):
        span(3, x, 2 * x)
    with pytest.raises(OutOfRange):
        span(3, 1, x**3)
    with pytest.raises(OutOfRange):
        PolySpace.from_polys([], 3)


def test_wronskian_and_exponents_of_one_and_x_squared():
    X = span(3, 1, x**2)
    assert wronskian_of_space(X) == x
    assert exponents_at(X, Fraction(0)) == [0, 2]
    assert exponents_at(X, Fraction(1)) == [0, 1]
    assert exponents_at(X, INFINITY) == [0, 2]


def test_wronskian_of_space_ignores_the_choice_of_basis(rng):
    for _ in range(100):
        X = split_triple(rng) if rng.random() < 0.5 else split_pair(rng)
        basis = list(X.basis)
        mixed = [
            sum((rng.randint(-2, 2) * p for p in basis[:i]), rng.choice([1, 2, -3]) * basis[i])
            for i in range(len(basis))
        ]
        mixed.reverse()
        assert PolySpace.from_polys(mixed, X.d) == X
        assert monic(wronskian(mixed)) == wronskian_of_space(X)


def test_auto_stratum_data():
    assert auto_stratum_data(span(3, 1, x**2)) == data((Fraction(0), (1, 0)), (INFINITY, (1, 0)))
    assert auto_stratum_data(span(4, 1, x, x**3)) == data((Fraction(0), (1, 0, 0)), (INFINITY, (1, 1, 0)))
    assert auto_stratum_data(span(3, x, x**2)) == data((Fraction(0), (1, 1)),)


def test_auto_stratum_data_needs_rational_roots():
    with pytest.raises(UnresolvedSingularity):
        auto_stratum_data(span(4, 1, x**3 + 3 * x))


def test_membership_at_infinity(line):
    assert not stratum_membership(line, data((INFINITY, (1, 0))))
    assert stratum_membership(line, data((INFINITY, (1, 1))))


def test_membership_checks_the_wronskian():
    X = span(3, 1, x**2)
    assert stratum_membership(X, data((Fraction(0), (1, 0)), (INFINITY, (1, 0))))
    assert not stratum_membership(X, data((Fraction(1), (1, 0)), (INFINITY, (1, 0))))


def test_verified_stratum_data_rejects_wrong_data():
    X = span(3, 1, x**2)
    with pytest.raises(MembershipFailed):
        verified_stratum_data(X, data((Fraction(0), (1, 0))))
    with pytest.raises(MembershipFailed):
        verified_stratum_data(X, data((Fraction(0), (1, 1))))


def test_parse_stratum_data():
    parsed = parse_stratum_data(["inf:1,0", "0:1,0"], 2)
    assert parsed.points == (Fraction(0), INFINITY)
    assert parsed.at_infinity() == Partition((1, 0))
    with pytest.raises(NotationError):
        parse_stratum_data(["0:1,0", "0:1,1"], 2)
    with pytest.raises(NotationError):
        parse_stratum_data(["0-1,0"], 2)


def test_base_points():
    assert base_points(span(3, x, x**2)).roots == (Fraction(0),)
    assert base_points(span(3, x, x**2)).gcd == x
    assert base_points(span(3, 1, x)).gcd == R.one


def test_one_and_x_squared_is_pure():
    X = span(3, 1, x**2)
    assert dual_space(X) == X
    result = selfdual_check(X)
    assert result.status is SelfDuality.PURE
    assert result.g == R.one


def test_divided_wronskian():
    X = span(3, 1, x**2)
    T = associated_T(verified_stratum_data(X), 2)
    assert T.factors == (x, R.one)
    assert divided_wronskian([], T) == R.one
    assert divided_wronskian([R.one], T) == R.one
    assert divided_wronskian(X.basis, T) == 2 * R.one
    with pytest.raises(NotDivisible):
        divided_wronskian([R.one, x + 1], TPolynomials((x, R.one)))


def test_dual_of_one_x_x_cubed():
    X = span(4, 1, x, x**3)
    dual = dual_space_full(X)
    assert dual.space == span(4, 1, x**2, x**3)
    assert dual.data == data((Fraction(0), (1, 1, 0)), (INFINITY, (1, 0, 0)))
    assert dual.T.factors == (x, R.one, R.one)
    assert selfdual_check(X).status is SelfDuality.NOT_SELF_DUAL
    assert not selfdual_check(X).is_self_dual


def test_span_of_even_powers_is_pure():
    X = span(5, 1, x**2 + 1, (x**2 + 1) ** 2)
    assert X == span(5, 1, x**2, x**4)
    assert wronskian_of_space(X) == x**3
    assert reduced_wronskian(X) == x
    assert associated_T(verified_stratum_data(X), 3).factors == (x, x, R.one)
    assert selfdual_check(X).status is SelfDuality.PURE


def test_base_point_gives_self_duality():
    X = span(3, x, x**2)
    result = selfdual_check(X)
    assert result.status is SelfDuality.SELF_DUAL
    assert result.g == x
    assert result.dual == span(2, 1, x)


def test_rank_two_spaces_are_self_dual(rng):
    for _ in range(100):
        k = rng.choice([0, 0, 1, 2, 3])
        X = split_pair(rng, base_power=k)
        result = selfdual_check(X)
        assert result.is_self_dual
        if k == 0:
            assert result.status is SelfDuality.PURE
        else:
            assert result.status is SelfDuality.SELF_DUAL
            assert result.g == base_points(X).gcd


def test_dual_lies_in_the_dual_cells(rng):
    spaces = [split_pair(rng, base_power=rng.randint(0, 2)) for _ in range(50)]
    spaces += [split_triple(rng) for _ in range(50)]
    for X in spaces:
        dual = dual_space_full(X)
        assert dual.space.N == X.N
        assert stratum_membership(dual.space, dual.data)


def test_dual_operator_identity(rng):
    assert dual_operator_identity_check(span(4, 1, x, x**3))
    for _ in range(50):
        assert dual_operator_identity_check(split_pair(rng, base_power=rng.randint(0, 2)))
        assert dual_operator_identity_check(split_triple(rng))


def test_factorized_operator_matches_the_kernel_operator(rng):
    for X in [span(3, 1, x**2), span(4, 1, x, x**3)] + [split_triple(rng) for _ in range(100)]:
        T = associated_T(verified_stratum_data(X), X.N)
        assert build_DX_factorized(y_from_basis(X.basis, T), T) == fundamental_operator(X)


def test_fundamental_operator_of_one_and_x_squared():
    op = fundamental_operator(span(3, 1, x**2))
    assert op.order == 2
    assert op.coeffs[0] == -ratfunc(R.one, x)
    assert not op.coeffs[1]


def test_factorized_operator_checks_its_input(line):
    T = associated_T(verified_stratum_data(line), 2)
    with pytest.raises(OutOfRange):
        build_DX_factorized([], T)


def test_squared_spaces_are_pure(rng):
    for _ in range(100):
        X = split_pair(rng)
        squared = squaring_map(X)
        assert squared.N == 3 and squared.d == 2 * X.d - 1
        assert reduced_wronskian(squared) == wronskian_of_space(X)
        assert selfdual_check(squared).status is SelfDuality.PURE


def test_squaring_needs_rank_two():
    with pytest.raises(RankMismatch):
        squaring_map(span(4, 1, x, x**3))


def test_miura_operator_recovers_the_fundamental_operator(rng):
    for X in [span(3, 1, x**2)] + [split_pair(rng) for _ in range(100)]:
        v, T = miura_potential(X)
        assert half_conjugate(miura_scalar_operator("C", 1, [v]), T) == fundamental_operator(X)


def test_miura_potential_rejects_base_points_and_higher_rank():
    with pytest.raises(OutOfRange):
        miura_potential(span(3, x, x**2))
    with pytest.raises(RankMismatch):
        miura_potential(span(4, 1, x, x**3))


def test_miura_scalar_operator_orders():
    v = ratfunc(R.one, x)
    assert miura_scalar_operator("C", 2, [v, v]).order == 4
    assert miura_scalar_operator("B", 1, [v]).order == 3
    with pytest.raises(OutOfRange):
        miura_scalar_operator("A", 1, [v])
    with pytest.raises(OutOfRange):
        miura_scalar_operator("C", 2, [v])


def test_shift_by_roots(line):
    shifted = shift_by_roots(line, [Fraction(1)], [2])
    e = linear_factor(1)
    assert shifted == span(5, e**2, x * e**2)
    result = selfdual_check(shifted)
    assert result.status is SelfDuality.SELF_DUAL
    assert result.g == e**2
    with pytest.raises(OutOfRange):
        shift_by_roots(line, [Fraction(1)], [-1])


def test_affine_substitution_moves_the_wronskian(rng):
    a, b = Fraction(2), Fraction(-1, 3)
    for _ in range(100):
        X = split_triple(rng)
        moved = affine_substitute(X, a, b)
        assert moved.degrees() == X.degrees()
        assert wronskian_of_space(moved) == monic(affine(wronskian_of_space(X), a, b))
    with pytest.raises(OutOfRange):
        affine_substitute(X, 0, b)
