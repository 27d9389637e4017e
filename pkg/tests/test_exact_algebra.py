from fractions import Fraction

import pytest

from src.errors import DependentBasis, NotAPower, NotationError, NotDivisible
from src.exact_algebra import (
    DiffOp,
    K,
    R,
    coeffs_of,
    diffop_compose,
    diffop_conjugate_by_logderiv,
    diffop_formal_conjugate,
    diffop_from_kernel,
    exact_quotient,
    first_order,
    format_fraction,
    identity,
    linear_factor,
    log_derivative,
    parse_fraction,
    poly_from_coeffs,
    poly_nth_root,
    ratfunc,
    rational_roots,
    rref_rational,
    to_fraction,
    to_rat,
    wronskian,
    x,
)


def random_poly(rng, max_degree=4):
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, max_degree + 1))]
    coeffs[-1] = coeffs[-1] or Fraction(1)
    return poly_from_coeffs(coeffs)


def random_independent(rng, count):
    degrees = sorted(rng.sample(range(0, 6), count))
    return [x**k + random_poly(rng, k - 1) if k else R(rng.randint(1, 4)) for k in degrees]


def test_parse_fraction_accepts_exact_rationals():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction(" -7 ") == Fraction(-7)
    assert format_fraction(Fraction(6, 4)) == "3/2"
    assert format_fraction(Fraction(5)) == "5"


@pytest.mark.parametrize("text", ["0.5", "1e3", "", "1/0", "abc"])
def test_parse_fraction_rejects_inexact_or_malformed(text):
    with pytest.raises(NotationError):
        parse_fraction(text)


def test_coefficients_are_listed_from_low_degree():
    p = poly_from_coeffs(["1", "0", "1/2"])
    assert p == R(1) + x**2 / 2
    assert [to_fraction(c) for c in coeffs_of(p)] == [1, 0, Fraction(1, 2)]


def test_exact_quotient():
    assert exact_quotient(x**2 - 1, x - 1) == x + 1
    with pytest.raises(NotDivisible):
        exact_quotient(x**2 + 1, x)


def test_poly_nth_root():
    assert poly_nth_root(((x + 1) * (x - 2)) ** 3, 3) == (x + 1) * (x - 2)
    half = linear_factor(Fraction(1, 2))
    assert poly_nth_root(half**4, 2) == half**2
    with pytest.raises(NotAPower):
        poly_nth_root(x**2 + 1, 2)
    with pytest.raises(NotAPower):
        poly_nth_root(x**3, 2)


def test_poly_nth_root_inverts_powers(rng):
    for _ in range(100):
        k = rng.randint(1, 6)
        q = x**k + random_poly(rng, k - 1)
        n = rng.randint(2, 4)
        assert poly_nth_root(q**n, n) == q


def test_rational_roots_split_off_irreducible_part():
    roots, rest = rational_roots((x - 1) ** 2 * (2 * x + 1) * (x**2 + 2))
    assert [(to_fraction(z), m) for z, m in roots] == [(Fraction(-1, 2), 1), (Fraction(1), 2)]
    assert rest == x**2 + 2


def test_wronskian_examples():
    assert wronskian([R.one, x]) == R.one
    assert wronskian([R.one, x, x**3]) == 6 * x
    assert wronskian([x, 2 * x]) == R.zero


def test_wronskian_alternates_and_scales(rng):
    for _ in range(100):
        fs = [random_poly(rng) for _ in range(3)]
        swapped = [fs[1], fs[0], fs[2]]
        assert wronskian(swapped) == -wronskian(fs)
        c = rng.randint(2, 5)
        assert wronskian([c * fs[0], fs[1], fs[2]]) == c * wronskian(fs)


def test_wronskian_scales_by_the_determinant_of_a_change_of_basis(rng):
    for _ in range(100):
        fs = random_independent(rng, rng.randint(2, 4))
        original = wronskian(fs)
        changed, det = list(fs), 1
        for _ in range(6):
            i, j = rng.sample(range(len(fs)), 2)
            step = rng.choice(["add", "scale", "swap"])
            if step == "add":
                changed[i] = changed[i] + rng.randint(-3, 3) * changed[j]
            elif step == "scale":
                c = rng.choice([-3, -2, 2, 3])
                changed[i] = c * changed[i]
                det *= c
            else:
                changed[i], changed[j] = changed[j], changed[i]
                det = -det
        assert wronskian(changed) == det * original


def test_rref_rational_pivots():
    rows, pivots = rref_rational([[to_rat(c) for c in row] for row in [[2, 4, 0], [1, 2, 1]]], 3)
    assert pivots == (0, 2)
    assert [[to_fraction(c) for c in row] for row in rows] == [[1, 2, 0], [0, 0, 1]]


def test_diffop_from_kernel_annihilates_basis(rng):
    for _ in range(100):
        basis = random_independent(rng, rng.randint(1, 3))
        op = diffop_from_kernel(basis)
        assert op.order == len(basis)
        assert all(not op.apply(p) for p in basis)


def test_diffop_from_kernel_rejects_dependent_basis():
    with pytest.raises(DependentBasis):
        diffop_from_kernel([x, 3 * x])


def test_operator_of_span_one_x_squared():
    op = diffop_from_kernel([R.one, x**2])
    assert op == diffop_compose([first_order(-ratfunc(R.one, x)), identity(1)])
    assert op.coeffs[0] == -ratfunc(R.one, x)
    assert not op.coeffs[1]


def test_formal_conjugate_examples():
    # (d + a)^* = d - a
    a = ratfunc(x, x + 1)
    assert diffop_formal_conjugate(first_order(a)) == first_order(-a)
    # (d^2 + b)^* = d^2 + b
    b = DiffOp((K.zero, ratfunc(R.one, x)))
    assert diffop_formal_conjugate(b) == b


def random_ratfunc(rng):
    return ratfunc(random_poly(rng, 2), random_poly(rng, 1))


def test_formal_conjugate_is_an_involution(rng):
    for _ in range(100):
        op = diffop_from_kernel(random_independent(rng, rng.randint(1, 5)))
        assert diffop_formal_conjugate(diffop_formal_conjugate(op)) == op


def test_formal_conjugate_reverses_products_of_first_order_factors(rng):
    for _ in range(100):
        shifts = [random_ratfunc(rng) for _ in range(rng.randint(1, 3))]
        product = diffop_compose([first_order(f) for f in shifts])
        expected = diffop_compose([first_order(-f) for f in reversed(shifts)])
        assert diffop_formal_conjugate(product) == expected


def test_formal_conjugate_reverses_products(rng):
    for _ in range(100):
        left = diffop_from_kernel(random_independent(rng, rng.randint(1, 2)))
        right = diffop_from_kernel(random_independent(rng, rng.randint(1, 2)))
        product = diffop_compose([left, right])
        expected = diffop_compose([diffop_formal_conjugate(right), diffop_formal_conjugate(left)])
        assert diffop_formal_conjugate(product) == expected


def test_conjugation_moves_the_kernel():
    g = linear_factor(-1)
    op = diffop_from_kernel([R.one, x])
    conjugated = diffop_conjugate_by_logderiv(op, log_derivative(g))
    assert conjugated == diffop_from_kernel([g, g * x])
