"""Shared fixtures: rings, desk sequences, and known minimal bases."""

import pytest

from pgroebner import Zpr, parse_matrix, parse_vector

Z4 = Zpr(2, 2)
Z5 = Zpr(5, 1)
Z8 = Zpr(2, 3)
Z9 = Zpr(3, 2)

# sequence 1,4,3,3,2 over Z_5 and its minimal TOP basis
SEQ_Z5 = (1, 4, 3, 3, 2)
GB_Z5_TOP = """\
[2x+2, x^4+3x^3+x]
[x^2+2x+4, 4x^2+2x]
"""

# sequence 1,4,4,7,7 over Z_9: 4-row TOP basis, 2-row POT basis
SEQ_Z9A = (1, 4, 4, 7, 7)
GEN_Z9A = """\
[1, 8x^5+5x^4+5x^3+2x^2+2x]
[0, x^6]
"""
GB_Z9A_TOP = """\
[8, x^5+4x^4+4x^3+7x^2+7x]
[x+5, 3x^4+3x^2+x]
[x^2+3x+2, x^2+4x]
[3x+6, 3x]
"""

# sequence 6,3,1,5,6 over Z_9: 2-row TOP basis
SEQ_Z9B = (6, 3, 1, 5, 6)
GB_Z9B_TOP = """\
[x^3+4x^2+7x+4, x^2+3x]
[6x^2+8, x^3+5x^2+6x]
"""


@pytest.fixture
def z4():
    return Z4


@pytest.fixture
def z5():
    return Z5


@pytest.fixture
def z8():
    return Z8


@pytest.fixture
def z9():
    return Z9


def rows(ring, text):
    return parse_matrix(ring, text)


def vec(ring, text):
    return parse_vector(ring, text)
