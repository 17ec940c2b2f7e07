import pytest

from monocurve.curvegen import MatrixExponents, curve_exponents, weights_of
from monocurve.polyring import Weights

# s-family P(s+1, s^2-s-1, s)
S_FAMILY = {s: (s + 1, s * s - s - 1, s) for s in range(4, 9)}
TYPE2_CURVE = (7, 9, 10)
SMALL_CURVE = (3, 4, 5)
# type 1' with a2 > (r-1)a1
CASE1_RAW = [(2, 3, 1, 1, 2, 1), (2, 5, 1, 1, 7, 2), (3, 4, 1, 1, 5, 2)]


def exps(w):
    return curve_exponents(Weights(*w))


def type1_prime_fixtures():
    out = [exps(w) for w in S_FAMILY.values()] + [exps(SMALL_CURVE)]
    out += [MatrixExponents.from_raw(r) for r in CASE1_RAW]
    assert all(weights_of(e) is not None for e in out)
    return out


def all_fixtures():
    return type1_prime_fixtures() + [exps(TYPE2_CURVE)]


def fixture_id(e):
    return ",".join(map(str, e.raw))


@pytest.fixture(scope="session")
def p5114():
    return exps((5, 11, 4))
