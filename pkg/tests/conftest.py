"""Shared fixtures: the worked examples and their frozen expected values."""

import pytest

from detpres import (
    CoordinatePresentation,
    Ideal,
    PolynomialRing,
    presented_variety,
    segre_veronese,
    toric_variety,
)

HEXAGON = [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]

# 4x4 matrix of O(2,1,1) on P1 x P1 x P1 with the printed section order.
OMEGA_211 = [
    ["y0", "y1", "y4", "y5"],
    ["y2", "y3", "y6", "y7"],
    ["y4", "y5", "y8", "y9"],
    ["y6", "y7", "y10", "y11"],
]

# The three 2x4 matrices of O(1,1,1), one per coordinate split.
OMEGA_111 = {
    (1, 0, 0): [["y0", "y1", "y2", "y3"], ["y4", "y5", "y6", "y7"]],
    (0, 1, 0): [["y0", "y1", "y4", "y5"], ["y2", "y3", "y6", "y7"]],
    (0, 0, 1): [["y0", "y2", "y4", "y6"], ["y1", "y3", "y5", "y7"]],
}

# 7x7 matrix of the hexagon surface at dilation 2, split (1, 1).
OMEGA_DELPEZZO = [
    ["y0", "y1", "y3", "y4", "y5", "y8", "y9"],
    ["y1", "y2", "y4", "y5", "y6", "y9", "y10"],
    ["y3", "y4", "y7", "y8", "y9", "y12", "y13"],
    ["y4", "y5", "y8", "y9", "y10", "y13", "y14"],
    ["y5", "y6", "y9", "y10", "y11", "y14", "y15"],
    ["y8", "y9", "y12", "y13", "y14", "y16", "y17"],
    ["y9", "y10", "y13", "y14", "y15", "y17", "y18"],
]

# 6x6 matrix of the doubled Pluecker embedding, split (1, 1).
OMEGA_GRASSMANNIAN = [
    ["y0", "y1", "y2", "y3", "y4", "y5"],
    ["y1", "y6", "y7", "y8", "y5 + y11", "y9"],
    ["y2", "y7", "y10", "y11", "y12", "y13"],
    ["y3", "y8", "y11", "y14", "y15", "y16"],
    ["y4", "y5 + y11", "y12", "y15", "y17", "y18"],
    ["y5", "y9", "y13", "y16", "y18", "y19"],
]

PLUCKER_VARS = ("x_1_2", "x_1_3", "x_1_4", "x_2_3", "x_2_4", "x_3_4")
PLUCKER_RELATION = "x_1_2*x_3_4 - x_1_3*x_2_4 + x_2_3*x_1_4"

# Ordered degree-2 basis of the quotient: lex-descending with x_1_3*x_2_4
# rewritten in terms of the other products.
PLUCKER_O2_SECTIONS = [
    "x_1_2^2", "x_1_2*x_1_3", "x_1_2*x_1_4", "x_1_2*x_2_3", "x_1_2*x_2_4",
    "x_1_2*x_3_4", "x_1_3^2", "x_1_3*x_1_4", "x_1_3*x_2_3", "x_1_3*x_3_4",
    "x_1_4^2", "x_1_4*x_2_3", "x_1_4*x_2_4", "x_1_4*x_3_4", "x_2_3^2",
    "x_2_3*x_2_4", "x_2_3*x_3_4", "x_2_4^2", "x_2_4*x_3_4", "x_3_4^2",
]


@pytest.fixture(scope="session")
def pp1cubed_o211():
    return segre_veronese((1, 1, 1), (2, 1, 1), section_order="lex")


@pytest.fixture(scope="session")
def pp1cubed_o111():
    return segre_veronese((1, 1, 1), (1, 1, 1), section_order="lex")


@pytest.fixture(scope="session")
def del_pezzo():
    return toric_variety(HEXAGON, 2, section_order="lex")


@pytest.fixture(scope="session")
def plucker_presentation():
    ring = PolynomialRing(PLUCKER_VARS, ((1, 1, 1, 1, 1, 1),))
    relations = Ideal(ring, (ring.parse(PLUCKER_RELATION),))
    return CoordinatePresentation(ring, relations, 1)


@pytest.fixture(scope="session")
def grassmannian_o1(plucker_presentation):
    return presented_variety(plucker_presentation, (1,), section_order="lex")


@pytest.fixture(scope="session")
def grassmannian_o2(plucker_presentation):
    return presented_variety(
        plucker_presentation,
        (2,),
        section_order="lex",
        gamma_monomials=PLUCKER_O2_SECTIONS,
    )
