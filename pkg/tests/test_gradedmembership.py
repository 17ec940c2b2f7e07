import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monocurve.curvegen import weights_of
from monocurve.gradedmembership import (
    CertificateError,
    IdealGens,
    MembershipCertificate,
    NotMember,
    WeightMismatch,
    component_membership,
    contained,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_member,
    m_multiples,
    monomials_of_degree,
    monomials_of_wdegree,
)
from monocurve.polyring import FieldSpec, NonHomogeneous, Poly, Weights, mono
from monocurve.sympow import d_poly, fgh, sympow_basis

from conftest import all_fixtures

W = Weights(5, 11, 4)


def P_of(e, field=FieldSpec()):
    return IdealGens(fgh(e, field), weights_of(e), ("F", "G", "H"))


def test_monomials_22():
    assert set(monomials_of_wdegree(22, W)) == {(0, 2, 0), (2, 0, 3)}


def test_monomials_edge():
    assert monomials_of_wdegree(0, W) == ((0, 0, 0),)
    assert monomials_of_wdegree(1, W) == ()
    assert len(monomials_of_degree(2)) == 6


def test_monomials_brute_force():
    for d in range(60):
        brute = {(i, j, k) for i in range(13) for j in range(6) for k in range(16) if 5 * i + 11 * j + 4 * k == d}
        assert set(monomials_of_wdegree(d, W)) == brute


class TestMembership:
    def test_paper_d3_in_square(self, p5114):
        d3 = d_poly(3, p5114).value
        sq = ideal_power(P_of(p5114), 2)
        cert = component_membership(d3, sq)
        assert isinstance(cert, MembershipCertificate)
        assert cert.expand() == d3

    def test_one_not_in_p(self, p5114):
        res = component_membership(Poly.constant(1), P_of(p5114))
        assert isinstance(res, NotMember) and res.degree == 0

    def test_d3_not_in_m_square(self, p5114):
        d3 = d_poly(3, p5114).value
        res = component_membership(d3, m_multiples(ideal_power(P_of(p5114), 2), 1))
        assert isinstance(res, NotMember) and res.degree == 44

    def test_f_not_in_mp(self, p5114):
        res = component_membership(fgh(p5114)[0], m_multiples(P_of(p5114), 1))
        assert not res and res.degree == 22
        # the degree-22 part of mP is empty: no monomial of degree 22 - 22 + ... shifts F
        assert monomials_of_wdegree(6, W) == monomials_of_wdegree(7, W) == ()

    def test_inhomogeneous_componentwise(self, p5114):
        F, G, H = fgh(p5114)
        assert is_member(F + G, P_of(p5114))
        assert not is_member(F + mono(1, 0, 0), P_of(p5114))

    def test_bad_certificate(self, p5114):
        F, G, H = fgh(p5114)
        cert = MembershipCertificate((F, G), (Poly.constant(1), Poly.constant(1)))
        with pytest.raises(CertificateError):
            cert.verify(F)


class TestIdealOps:
    def test_square_dedup(self, p5114):
        assert len(ideal_power(P_of(p5114), 2)) == 6

    def test_unit_product(self, p5114):
        P = P_of(p5114)
        one = IdealGens((Poly.constant(1),), P.weights)
        assert ideal_product(P, one).generators == P.generators

    def test_sym3_times_sym2(self, p5114):
        w = weights_of(p5114)
        s3 = sympow_basis(3, p5114)
        s2 = sympow_basis(2, p5114)
        prod = ideal_product(IdealGens(s3.generators, w, s3.labels), IdealGens(s2.generators, w, s2.labels))
        keys = {(a * b).monic() for a in s3.generators for b in s2.generators}
        assert len(prod) == len(keys) <= len(s3) * len(s2)

    def test_m_multiples_counts(self, p5114):
        P = P_of(p5114)
        assert m_multiples(P, 0) is P
        assert len(m_multiples(P, 1)) == 9
        F = IdealGens((fgh(p5114)[0],), P.weights)
        assert len(m_multiples(F, 2)) == 6

    def test_sum_dedups(self, p5114):
        P = P_of(p5114)
        assert len(ideal_sum(P, P)) == 3

    def test_weight_mismatch(self, p5114):
        a = IdealGens((mono(1, 0, 0),), W)
        b = IdealGens((mono(1, 0, 0),), Weights(1, 1, 1))
        with pytest.raises(WeightMismatch):
            contained(a, b)

    def test_nonhomogeneous_generator(self):
        with pytest.raises(NonHomogeneous):
            IdealGens((Poly.parse("y^2 + x"),), W)


class TestContainment:
    def test_sym2_in_mp(self, p5114):
        w = weights_of(p5114)
        b = sympow_basis(2, p5114)
        v = contained(IdealGens(b.generators, w, b.labels), m_multiples(P_of(p5114), 1))
        assert v.contained and len(v.certificates) == len(b)
        for g, c in zip(b.generators, v.certificates):
            assert c.expand() == g

    def test_sym3_not_in_m_square(self, p5114):
        w = weights_of(p5114)
        b = sympow_basis(3, p5114)
        v = contained(IdealGens(b.generators, w, b.labels), m_multiples(ideal_power(P_of(p5114), 2), 1))
        assert not v.contained
        assert v.witness_label == "D_3" and v.witness_degree == 44

    def test_jobs_do_not_change_verdict(self, p5114):
        w = weights_of(p5114)
        b = sympow_basis(5, p5114)
        src = IdealGens(b.generators, w, b.labels)
        tgt = m_multiples(ideal_power(P_of(p5114), 3), 1)
        one = contained(src, tgt)
        two = contained(src, tgt, jobs=2)
        assert one.contained and two.contained
        assert [c.cofactors for c in one.certificates] == [c.cofactors for c in two.certificates]


# -- randomized oracles -------------------------------------------------------
#
# P is the kernel of x, y, z -> t^n1, t^n2, t^n3, so a homogeneous f lies in P
# exactly when its coefficients sum to zero.  Monomial ideals give a second,
# divisibility-based oracle.

FIXTURES = all_fixtures()


def _random_homogeneous(rng, w, d, zero_sum):
    mons = monomials_of_wdegree(d, w)
    if len(mons) < 2:
        return None
    picks = rng.sample(mons, rng.randint(2, min(5, len(mons))))
    coeffs = [rng.randint(-5, 5) or 1 for _ in picks]
    total = sum(coeffs)
    if zero_sum:
        coeffs[-1] -= total
    elif total == 0:
        coeffs[-1] += 1
    p = Poly(dict(zip(picks, coeffs)))
    return p if p else None


def _cases(zero_sum, n=100, seed=11):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        e = rng.choice(FIXTURES)
        w = weights_of(e)
        d = rng.randint(min(w) * 2, 6 * max(w))
        f = _random_homogeneous(rng, w, d, zero_sum)
        if f is not None:
            out.append((e, f))
    return out


@pytest.mark.parametrize("e,f", _cases(True))
def test_completeness_oracle(e, f):
    res = component_membership(f, P_of(e))
    assert isinstance(res, MembershipCertificate)
    assert res.expand() == f


@pytest.mark.parametrize("e,f", _cases(False, seed=23))
def test_refutation_oracle(e, f):
    assert isinstance(component_membership(f, P_of(e)), NotMember)


@settings(max_examples=100, deadline=None)
@given(
    gens=st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=1, max_size=4),
    target=st.tuples(*[st.integers(0, 6)] * 3),
    p=st.sampled_from([None, 2, 3]),
)
def test_monomial_ideal_oracle(gens, target, p):
    fld = FieldSpec(p)
    w = Weights(1, 1, 1)
    ideal = IdealGens(tuple(Poly.monomial(g, 1, fld) for g in gens), w)
    f = Poly.monomial(target, 1, fld)
    expected = any(all(t >= g for t, g in zip(target, m)) for m in gens)
    res = component_membership(f, ideal)
    assert bool(res) == expected
    if expected:
        assert res.expand() == f


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_soundness_random_combinations(data):
    # f built as a combination of the generators is always certified
    e = data.draw(st.sampled_from(FIXTURES))
    P = ideal_power(P_of(e), data.draw(st.integers(1, 2)))
    w = P.weights
    f = Poly.zero()
    for g, dg in zip(P.generators, P.degrees):
        shift = data.draw(st.integers(0, 2 * max(w)))
        mons = monomials_of_wdegree(shift, w)
        if mons:
            m = data.draw(st.sampled_from(mons))
            f = f + g.shift(m, data.draw(st.integers(-3, 3)))
    if not f:
        return
    res = component_membership(f, P)
    assert isinstance(res, MembershipCertificate) and res.expand() == f
