import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrices, rationals
from linapps.eigen import (
    Polynomial,
    char_poly,
    divisors,
    eigenpairs,
    eigenspace,
    float_eigenvalues,
    null_space,
    numeric_roots,
    rational_roots,
)
from linapps.errors import NotAnEigenvalueError, ShapeError
from linapps.geometry import det
from linapps.matrix import Matrix

small_fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


def with_spectrum(diag, p):
    """P diag P^-1 using sympy for the inverse."""
    sp = sympy.Matrix(p)
    d = sympy.diag(*[sympy.Rational(x.numerator, x.denominator) for x in diag])
    a = sp * d * sp.inv()
    return Matrix([[Fraction(int(x.p), int(x.q)) for x in a.row(i)] for i in range(a.rows)])


def bisect(f, lo, hi, tol=1e-12):
    assert f(lo) * f(hi) < 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def test_char_poly_three_sector(strawberry):
    p = char_poly(strawberry)
    # expansion of (2/3 - x)(x^2 - 10/3 x + 7/3)
    assert p.coeffs == (Fraction(14, 9), Fraction(-41, 9), 4, -1)
    for root in (Fraction(2, 3), 1, Fraction(7, 3)):
        assert p(root) == 0
    assert p.leading == -1


def test_identity_and_diagonal_char_poly():
    assert char_poly(Matrix.identity(3)).coeffs == (1, -3, 3, -1)
    a, b, c = Fraction(1, 2), Fraction(-3), Fraction(5, 7)
    found = rational_roots(char_poly(Matrix([[a, 0, 0], [0, b, 0], [0, 0, c]])))
    assert dict(found.roots) == {a: 1, b: 1, c: 1}


def test_char_poly_shape():
    with pytest.raises(ShapeError):
        char_poly(Matrix.identity(4))
    with pytest.raises(ShapeError):
        char_poly(Matrix([[1, 2]]))
    assert char_poly(Matrix([[5]])).coeffs == (5, -1)


@given(st.integers(1, 3).flatmap(matrices))
def test_char_poly_invariants(a):
    p = char_poly(a)
    n = a.nrows
    assert p.leading == (-1) ** n
    assert p(0) == det(a)
    assert p.coeffs[n - 1] == (-1) ** (n - 1) * a.trace()


def test_rational_roots_three_sector(strawberry):
    found = rational_roots(char_poly(strawberry))
    assert found.roots == ((Fraction(2, 3), 1), (1, 1), (Fraction(7, 3), 1))
    assert found.remainder.degree == 0


def test_irrational_factor_left_alone():
    p = Polynomial((2, 0, -1)) * Polynomial((-1, 1))  # -(x^2 - 2)(x - 1)
    found = rational_roots(p)
    assert found.roots == ((1, 1),)
    assert found.remainder == Polynomial((2, 0, -1))


def test_multiple_and_zero_roots():
    p = Polynomial.from_roots([0, 0, Fraction(3, 2)], leading=-1)
    assert rational_roots(p).roots == ((0, 2), (Fraction(3, 2), 1))
    assert rational_roots(Polynomial.from_roots([2, 2, 2])).roots == ((2, 3),)


@given(st.lists(small_fracs, min_size=1, max_size=3), st.sampled_from([1, -1, Fraction(3, 5)]))
def test_rational_roots_round_trip(roots, lead):
    p = Polynomial.from_roots(roots, leading=lead)
    found = rational_roots(p)
    expected = {}
    for r in roots:
        expected[r] = expected.get(r, 0) + 1
    assert dict(found.roots) == expected
    rebuilt = found.remainder
    for r, m in found.roots:
        rebuilt = rebuilt * Polynomial.from_roots([r] * m)
    assert rebuilt == p


@given(st.lists(rationals, min_size=4, max_size=4))
def test_deflation_reproduces_polynomial(coeffs):
    if coeffs[-1] == 0:
        return
    p = Polynomial(tuple(coeffs))
    found = rational_roots(p)
    rebuilt = found.remainder
    for r, m in found.roots:
        rebuilt = rebuilt * Polynomial.from_roots([r] * m)
    assert rebuilt == p
    assert not rational_roots(found.remainder).roots


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-7) == [1, 7]
    assert divisors(2**5 * 10007 * 10009) == sorted(
        a * b * c for a in [1, 2, 4, 8, 16, 32] for b in (1, 10007) for c in (1, 10009)
    )


def test_numeric_sqrt2():
    roots = numeric_roots(Polynomial((-2, 0, 1)))
    assert all(r.is_real for r in roots)
    for r in roots:
        assert abs(r.value**2 - 2) <= 1e-12
    assert math.isclose(roots[1].value, math.sqrt(2), rel_tol=1e-15)


def test_numeric_three_sector_poly(strawberry):
    roots = numeric_roots(char_poly(strawberry))
    for got, want in zip([r.value for r in roots], [2 / 3, 1.0, 7 / 3]):
        assert abs(got - want) <= 1e-9


def test_numeric_single_real_root():
    oracle = bisect(lambda x: x**3 - x - 1, 1.0, 2.0)
    roots = numeric_roots(Polynomial((-1, -1, 0, 1)))
    real = [r for r in roots if r.is_real]
    assert len(real) == 1 and abs(real[0].value - oracle) <= 1e-9
    assert abs(real[0].value - 1.3247) < 1e-4
    cplx = [r.value for r in roots if not r.is_real]
    assert len(cplx) == 2 and cplx[0] == cplx[1].conjugate()


def test_numeric_repeated_roots_are_exact():
    roots = numeric_roots(Polynomial.from_roots([Fraction(1, 3), Fraction(1, 3), 2]))
    assert [r.value for r in roots] == [1 / 3, 1 / 3, 2.0]
    assert [r.value for r in numeric_roots(Polynomial.from_roots([5, 5, 5]))] == [5.0] * 3


def residual_ok(coeffs, x, tol=1e-9):
    """|p(x)| small relative to the size of the terms being summed."""
    val = sum(float(c) * x**i for i, c in enumerate(coeffs))
    scale = sum(abs(float(c)) * abs(x) ** i for i, c in enumerate(coeffs))
    return abs(val) <= tol * scale


@given(st.lists(rationals, min_size=2, max_size=4))
def test_numeric_residual(coeffs):
    p = Polynomial(tuple(coeffs))
    if p.degree < 1:
        return
    for r in numeric_roots(p):
        assert residual_ok(p.coeffs, r.value)


def test_three_sector_eigenspaces(strawberry):
    assert eigenspace(strawberry, Fraction(7, 3)) == [(5, 5, 4)]
    assert eigenspace(strawberry, Fraction(2, 3)) == [(0, 0, 1)]
    assert eigenspace(strawberry, 1) == [(1, -3, 0)]
    assert strawberry.apply((1, -3, 0)) == (1, -3, 0)
    with pytest.raises(NotAnEigenvalueError):
        eigenspace(strawberry, 2)


def test_null_space_canonical_form():
    assert null_space(Matrix([[0, 0], [0, 0]])) == [(1, 0), (0, 1)]
    assert null_space(Matrix([[2, 4, -6]])) == [(2, -1, 0), (3, 0, 1)]
    assert null_space(Matrix([["1/2", "1/3"], [3, 2]])) == [(2, -3)]
    assert null_space(Matrix.identity(3)) == []


def test_defective_matrix():
    (pair,) = eigenpairs(Matrix([[1, 1], [0, 1]]))
    assert pair.algebraic_multiplicity == 2 and pair.basis == ((1, 0),)


def test_irrational_spectrum_pairs():
    a = Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 1]])
    pairs = eigenpairs(a)
    assert [p.exact for p in pairs] == [False, True, False]
    for p in pairs:
        (v,) = p.basis
        av = a.apply([Fraction(x) for x in v]) if p.exact else [
            sum(float(a[i, j]) * v[j] for j in range(3)) for i in range(3)
        ]
        assert all(abs(float(x) - p.eigenvalue * y) < 1e-9 for x, y in zip(av, v))


def test_complex_eigenvalues_omitted():
    assert eigenpairs(Matrix([[0, -1], [1, 0]])) == []
    assert all(not r.is_real for r in float_eigenvalues(Matrix([[0, -1], [1, 0]])))


@settings(max_examples=40)
@given(
    st.lists(small_fracs, min_size=3, max_size=3),
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
)
def test_rational_spectrum_properties(diag, p):
    if sympy.Matrix(p).det() == 0:
        return
    a = with_spectrum(diag, p)
    pairs = eigenpairs(a)
    assert all(e.exact for e in pairs)
    for e in pairs:
        assert 1 <= len(e.basis) <= e.algebraic_multiplicity
        for v in e.basis:
            assert a.apply(v) == tuple(e.eigenvalue * x for x in v)
    spectrum = [e.eigenvalue for e in pairs for _ in range(e.algebraic_multiplicity)]
    assert sorted(spectrum) == sorted(diag)
    assert sum(spectrum) == a.trace()
    assert math.prod(spectrum) == det(a)
    floats = sorted(r.value for r in float_eigenvalues(a))
    for f, x in zip(floats, sorted(diag)):
        assert abs(f - x) <= 1e-9
