"""Exact polynomial engine: arithmetic, division, gcd machinery."""

from fractions import Fraction

import pytest

from biratlab.gaussian import GQ
from biratlab.hompoly import HomPoly, hom_gcd, hom_gcd3


def P(degree, terms):
    return HomPoly(degree, terms)


def test_gq_field_axioms():
    a = GQ(Fraction(3, 4), Fraction(-1, 2))
    b = GQ(Fraction(2, 5), Fraction(7, 3))
    assert (a * b) / b == a
    assert a + (-a) == GQ(0)
    assert (a / b) * b == a
    assert a ** 3 == a * a * a
    assert GQ(0, 1).norm2() == 1
    assert abs((a.to_complex() * b.to_complex()) - (a * b).to_complex()) < 1e-15


def test_poly_addition_cancels():
    p = P(2, {(2, 0, 0): 1, (1, 1, 0): Fraction(1, 2)})
    q = P(2, {(2, 0, 0): -1, (0, 0, 2): 3})
    s = p + q
    assert s.coeff(2, 0, 0) == GQ(0)
    assert s.coeff(1, 1, 0) == GQ(Fraction(1, 2))
    assert s.coeff(0, 0, 2) == GQ(3)


def test_poly_multiplication_degree_and_coeffs():
    p = P(1, {(1, 0, 0): 1, (0, 1, 0): 1})        # x + y
    q = P(1, {(1, 0, 0): 1, (0, 1, 0): -1})       # x - y
    prod = p * q                                   # x^2 - y^2
    assert prod.degree == 2
    assert prod.coeff(2, 0, 0) == GQ(1)
    assert prod.coeff(0, 2, 0) == GQ(-1)
    assert prod.coeff(1, 1, 0) == GQ(0)


def test_gaussian_coefficients_multiply():
    p = P(1, {(1, 0, 0): GQ(0, 1)})                # i*x
    assert (p * p).coeff(2, 0, 0) == GQ(-1)


def test_partial_derivative():
    p = P(3, {(2, 1, 0): 2, (0, 0, 3): 1})
    dx = p.partial(0)
    assert dx.coeff(1, 1, 0) == GQ(4)
    dz = p.partial(2)
    assert dz.coeff(0, 0, 2) == GQ(3)


def test_divexact_roundtrip():
    g = P(1, {(1, 0, 0): 1, (0, 1, 0): 1})
    f = P(2, {(2, 0, 0): 1, (1, 1, 0): 3, (0, 2, 0): 2})   # (x+y)(x+2y)
    q = f.divexact(g)
    assert q * g == f
    with pytest.raises(ValueError):
        P(2, {(2, 0, 0): 1}).divexact(g)


def test_evaluate_exact():
    p = P(2, {(1, 1, 0): 1, (0, 0, 2): -1})
    val = p.evaluate_exact((GQ(2), GQ(3), GQ(1)))
    assert val == GQ(5)


def test_gcd_monomial():
    a = P(4, {(2, 1, 1): 1})       # x^2 y z
    b = P(4, {(1, 2, 1): 1})       # x y^2 z
    c = P(4, {(1, 1, 2): 1})       # x y z^2
    g = hom_gcd3(a, b, c)
    assert g.degree == 3
    assert g.coeff(1, 1, 1) == GQ(1)


def test_gcd_linear_factor():
    # (x^2+xy, xy+y^2, xz+yz) share exactly (x + y)
    a = P(2, {(2, 0, 0): 1, (1, 1, 0): 1})
    b = P(2, {(1, 1, 0): 1, (0, 2, 0): 1})
    c = P(2, {(1, 0, 1): 1, (0, 1, 1): 1})
    g = hom_gcd3(a, b, c)
    assert g.degree == 1
    assert g.proportional_to(P(1, {(1, 0, 0): 1, (0, 1, 0): 1}))


def test_gcd_coprime():
    a = P(2, {(2, 0, 0): 1, (0, 2, 0): 1})
    b = P(2, {(0, 2, 0): 1, (0, 0, 2): 1})
    assert hom_gcd(a, b).degree == 0


def test_gcd_nontrivial_quadratic_factor():
    conic = P(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    l1 = P(1, {(1, 0, 0): 1, (0, 1, 0): 2})
    l2 = P(1, {(0, 1, 0): 1, (0, 0, 1): 5})
    g = hom_gcd(conic * l1, conic * l2)
    assert g.proportional_to(conic)


def test_gcd_random_products_agree():
    import numpy as np
    rng = np.random.default_rng(5)
    for _ in range(10):
        def rand_poly(deg):
            terms = {}
            for i in range(deg + 1):
                for j in range(deg + 1 - i):
                    v = int(rng.integers(-3, 4))
                    if v:
                        terms[(i, j, deg - i - j)] = v
            if not terms:
                terms[(deg, 0, 0)] = 1
            return HomPoly(deg, terms)
        g0 = rand_poly(1)
        a = rand_poly(2) * g0
        b = rand_poly(2) * g0
        g = hom_gcd(a, b)
        # shared factor recovered (possibly larger if the cofactors collide)
        assert g.degree >= 1
        assert g0.divides(a) and g0.divides(b)
        assert g.divides(a) and g.divides(b)


def test_proportionality():
    p = P(2, {(1, 1, 0): 2, (0, 0, 2): 4})
    q = p.scaled(GQ(Fraction(-3, 7), Fraction(1, 7)))
    assert p.proportional_to(q)
    assert not p.proportional_to(P(2, {(1, 1, 0): 2}))
