import pytest

from toricrobust import IntMatrix

# 5x7 cyclic configuration on t = 1..7
T57_ROWS = (
    (1, 1, 1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 6, 7),
    (1, 4, 9, 16, 25, 36, 49),
    (1, 8, 27, 64, 125, 216, 343),
    (1, 16, 81, 256, 625, 1296, 2401),
)

# generalized Lawrence matrix over T57 for the coefficient vectors below
GLM_ROWS = (
    (0, 1, 0, 1, 0, 1, -1, 1, 0, 0, 1, 0, -1, 0, 1),
    (0, 1, 0, 2, 0, 3, -4, 4, 0, 0, 5, 0, -6, 0, 7),
    (0, 1, 0, 4, 0, 9, -16, 16, 0, 0, 25, 0, -36, 0, 49),
    (0, 1, 0, 8, 0, 27, -64, 64, 0, 0, 125, 0, -216, 0, 343),
    (0, 1, 0, 16, 0, 81, -256, 256, 0, 0, 625, 0, -1296, 0, 2401),
    (-1, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (-2027, 0, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -3, 2, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -7, 0, 2, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 11, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 27, 0, 4, 0),
)

GLM_CS = ((7, 1, 2027), (1, -1), (1,), (2, 3, 7), (11, 1), (4, -1, -27), (1,))
GLM_LAMBDAS = ((0, 1, 0), (1, 0), (1,), (-1, 1, 0), (0, 1), (0, -1, 0), (1,))

# Graver basis of the monomial curve (4, 6, 5), one representative per sign
# pair; cross-checked against graver_brute_force in test_graver.
GR465_REPS = (
    (0, 5, -6),
    (1, -4, 4),
    (1, 1, -2),
    (2, -3, 2),
    (3, -2, 0),
    (4, -1, -2),
    (5, 0, -4),
)


@pytest.fixture(scope="session")
def t57():
    return IntMatrix.from_rows(T57_ROWS)


@pytest.fixture(scope="session")
def glm_matrix():
    return IntMatrix.from_rows(GLM_ROWS)


@pytest.fixture(scope="session")
def curve465():
    return IntMatrix.from_rows([[4, 6, 5]])


@pytest.fixture(scope="session")
def block_2x6():
    return IntMatrix.from_rows([[4, 6, 5, 0, 0, 0], [0, 0, 0, 4, 6, 5]])
