"""Shared fixtures: the standard example maps used across the suite."""

import pytest

from biratlab.gaussian import GQ
from biratlab.hompoly import HomPoly
from biratlab.ratmap import (HomogeneousMap, compose, linear_map_from_matrix,
                             matrix_inverse_gq)


def cremona_map() -> HomogeneousMap:
    """The standard quadratic involution (yz : xz : xy)."""
    return HomogeneousMap([HomPoly(2, {(0, 1, 1): 1}),
                           HomPoly(2, {(1, 0, 1): 1}),
                           HomPoly(2, {(1, 1, 0): 1})], name="cremona",
                          _assume_primitive=True)


def henon_map(a=1, c=-3) -> HomogeneousMap:
    """Degree-2 lift (yz : y^2 + c z^2 - a x z : z^2) of (x,y) -> (y, y^2+c-ax)."""
    return HomogeneousMap([HomPoly(2, {(0, 1, 1): 1}),
                           HomPoly(2, {(0, 2, 0): 1, (0, 0, 2): c, (1, 0, 1): -a}),
                           HomPoly(2, {(0, 0, 2): 1})],
                          name=f"henon_a{a}_c{c}", _assume_primitive=True)


def henon_inverse_map(a=1, c=-3) -> HomogeneousMap:
    """Lift of (x,y) -> ((x^2 + c - y)/a, x), the exact inverse of henon_map."""
    return HomogeneousMap([HomPoly(2, {(2, 0, 0): 1, (0, 0, 2): c, (0, 1, 1): -1}),
                           HomPoly(2, {(1, 0, 1): a}),
                           HomPoly(2, {(0, 0, 2): a})],
                          name=f"henon_inv_a{a}_c{c}", _assume_primitive=True)


_L_ROWS = [[1, 2, 0], [0, 1, 1], [1, 0, 3]]


def generic_linear() -> list[list[GQ]]:
    return [[GQ(v) for v in row] for row in _L_ROWS]


def twisted_cremona() -> tuple[HomogeneousMap, HomogeneousMap]:
    """A generic degree-2 pair (L o sigma, sigma o L^-1), an inverse pair."""
    sigma = cremona_map()
    m = generic_linear()
    f = compose(linear_map_from_matrix(m), sigma, name="L*cremona")
    g = compose(sigma, linear_map_from_matrix(matrix_inverse_gq(m)),
                name="cremona*Linv")
    return f, g


@pytest.fixture(scope="session")
def sigma():
    return cremona_map()


@pytest.fixture(scope="session")
def henon():
    return henon_map(1, -3)


@pytest.fixture(scope="session")
def henon_inv():
    return henon_inverse_map(1, -3)


@pytest.fixture(scope="session")
def horseshoe():
    return henon_map(1, -10)


@pytest.fixture(scope="session")
def horseshoe_inv():
    return henon_inverse_map(1, -10)


@pytest.fixture(scope="session")
def twisted_pair():
    return twisted_cremona()
