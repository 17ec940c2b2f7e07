import pytest

from monocurve.curvegen import MatrixType, WrongType, classify, r_index, weights_of
from monocurve.gradedmembership import IdealGens, contained, ideal_power, is_member, m_multiples
from monocurve.polyring import FieldSpec, NotDivisible, Poly, mono, reduce_mod_variable, substitute_powers
from monocurve.sympow import (
    LevelOutOfRange,
    Provenance,
    _apply_sigma,
    clearing_exponents,
    d2_general,
    d3_type1,
    d3_type2,
    d_poly,
    delta,
    dual_identity_check,
    fgh,
    sympow_basis,
    type2_char2_identity,
)

from conftest import TYPE2_CURVE, exps, fixture_id, type1_prime_fixtures

D2 = "-y^3 - x^5*z^2 + 3*x^2*y*z^3 - x*z^7"
D3 = "y^4 - x^8*z + 4*x^5*y*z^2 - 6*x^2*y^2*z^3 - x^4*z^6 + 4*x*y*z^7 - z^11"
F2 = FieldSpec(2)


def _parsed(*texts):
    return tuple(Poly.parse(t) for t in texts)


def test_minors(p5114):
    assert fgh(p5114) == _parsed("y^2 - x^2*z^3", "z^4 - x*y", "x^3 - y*z")


def test_minors_all_ones():
    assert fgh((1, 1, 1, 1, 1, 1)) == _parsed("y^2 - x*z", "z^2 - x*y", "x^2 - y*z")


def test_minors_type2():
    assert fgh(exps(TYPE2_CURVE)) == _parsed("y^3 - x*z^2", "z^3 - x^3*y", "x^4 - y^2*z")


class TestRecursion:
    def test_d2(self, p5114):
        assert str(d_poly(2, p5114).value) == D2

    def test_d3(self, p5114):
        d3 = d_poly(3, p5114).value
        assert str(d3) == D3
        assert len(d3) == 7
        assert [c for _, c in d3.sorted_terms()] == [1, -1, 4, -6, -1, 4, -1]

    def test_d1_is_f(self, p5114):
        assert d_poly(1, p5114).value == fgh(p5114)[0]

    def test_d_r_plus_1_mod_x(self, p5114):
        assert str(reduce_mod_variable(d_poly(4, p5114).value, "x")) == "-z^15"

    @pytest.mark.parametrize("level", [-1, 5])
    def test_level_range(self, p5114, level):
        with pytest.raises(LevelOutOfRange):
            d_poly(level, p5114)

    def test_type2_refused(self):
        with pytest.raises(WrongType):
            d_poly(2, exps(TYPE2_CURVE))


class TestD2:
    def test_certificate(self, p5114):
        d2, cert = d2_general(p5114)
        assert str(d2) == D2
        assert [str(h) for h in cert.cofactors] == ["-y", "-x*z^3", "-x^2*z^2"]

    def test_type2(self):
        e = exps(TYPE2_CURVE)
        d2, cert = d2_general(e)
        F, G, H = fgh(e)
        a1, a2, b1, b2, c1, c2 = e.raw
        alpha = max(0, a1 - a2)
        assert alpha == 2
        lhs = d2.shift((0, 0, c2))
        rhs = (H * F).shift((alpha, 0, 0)) - (G * G).shift((alpha + a2 - a1, b1 - b2, 0))
        assert lhs == rhs
        assert cert.expand() == d2

    @pytest.mark.parametrize("e", type1_prime_fixtures(), ids=fixture_id)
    def test_agrees_with_recursion(self, e):
        assert d2_general(e)[0] == d_poly(2, e).value


class TestD3Type1:
    def test_paper_certificate(self, p5114):
        d3, d3p, cert, _ = d3_type1(p5114)
        assert str(d3) == D3
        assert [str(h) for h in cert.cofactors] == ["1", "-z^3", "-x^2*z", "-2*x*z^2"]
        F, G, H = fgh(p5114)
        z = mono(0, 0, 1)
        x = mono(1, 0, 0)
        assert F * F - z**3 * G * G - x**2 * z * H * H - 2 * x * z**2 * G * H == d3

    def test_primed_is_redundant(self, p5114):
        # beta = 1 here, so D'_3 sits in degree 55, not 44; it lies in P^(2) P
        d3, d3p, _, cert_p = d3_type1(p5114)
        assert d3p != d3
        assert cert_p.expand() == d3p
        F, G, H = fgh(p5114)
        assert d3p == mono(1, 0, 1) * G * H * H - F * d_poly(2, p5114).value

    @pytest.mark.parametrize("e", type1_prime_fixtures(), ids=fixture_id)
    def test_f_squared_cofactor(self, e):
        _, _, cert, _ = d3_type1(e)
        alpha = max(0, 2 * e.a1 - e.a2)
        gamma = max(0, 2 * e.c2 - e.c1)
        assert cert.cofactors[0] == mono(alpha, e.b1 - e.b2, gamma)
        assert cert.expand() == d3_type1(e)[0]


class TestType2:
    def test_certificate_values(self):
        e = exps(TYPE2_CURVE)
        (_, d3, cert), *_ = d3_type2(e)
        assert [str(h) for h in cert.cofactors] == ["x*y*z", "z^2", "-x^2*z", "2*x^2*y"]
        assert cert.expand() == d3

    def test_sigma_images(self):
        e = exps(TYPE2_CURVE)
        out = d3_type2(e)
        assert [lab for lab, _, _ in out] == ["D_3", "D_3'", "D_3''"]
        w = weights_of(e)
        for _, value, cert in out:
            assert cert.expand() == value
            assert substitute_powers(value, w) == {}

    def test_sigma_order_three(self):
        d3 = d3_type2(exps(TYPE2_CURVE))[0][1]
        assert _apply_sigma(d3, 3) == d3

    def test_char2_single_generator(self):
        out = d3_type2(exps(TYPE2_CURVE), F2)
        assert len(out) == 1 and out[0][0] == "D_3c"
        assert out[0][2].expand() == out[0][1]

    def test_char2_identity(self):
        a, b, c = type2_char2_identity(exps(TYPE2_CURVE), F2)
        assert a == b == c

    def test_identity_needs_char2(self):
        # over Q the clearing divisions are not even exact
        with pytest.raises(NotDivisible):
            type2_char2_identity(exps(TYPE2_CURVE), FieldSpec())


class TestLemmas:
    @pytest.mark.parametrize("e", type1_prime_fixtures(), ids=fixture_id)
    def test_dual_identity(self, e):
        assert all(dual_identity_check(l, e) for l in range(1, r_index(e) + 2))

    def test_clearing_exponents(self, p5114):
        assert clearing_exponents(1, p5114) == ((0, 0, 0), (0, 0, 0))
        assert clearing_exponents(3, p5114) == ((2, 0, 0), (0, 0, 2))
        assert clearing_exponents(4, p5114) == ((3, 0, 0), (0, 0, 3))

    @pytest.mark.parametrize("e", type1_prime_fixtures(), ids=fixture_id)
    def test_congruences(self, e):
        r = r_index(e)
        case1 = e.a2 > (r - 1) * e.a1
        for l in range(1, r + 1):
            d = d_poly(l, e).value
            top = mono(0, e.b1 * (l + 1), 0, coeff=(-1) ** (l + 1))
            assert reduce_mod_variable(d, "x" if case1 else "z") == top
            rest = d - top + mono((l - 1) * e.a1 + l * e.a2, 0, e.c1 - (l - 1) * e.c2)
            mx, mz = e.a2 - (l - 1) * e.a1, e.c1 - (l - 1) * e.c2 + 1
            assert all(m[0] >= mx and m[2] >= mz for m in rest.terms)
        gamma = max(0, r * e.c2 - e.c1)
        tail = reduce_mod_variable(d_poly(r + 1, e).value, "x")
        assert tail == mono(0, 0, (r + 1) * e.c1 + r * e.c2 + gamma, coeff=-1)

    def test_delta(self, p5114):
        assert [delta(l, p5114) for l in range(5)] == [1, 0, 1, 0, 1]


class TestBasis:
    def test_levels_0_1(self, p5114):
        assert [str(g) for g in sympow_basis(0, p5114)] == ["1"]
        assert sympow_basis(1, p5114).labels == ("F", "G", "H")

    def test_level2(self, p5114):
        b = sympow_basis(2, p5114)
        assert b.provenance is Provenance.SCHENZEL_D2
        assert set(b.labels) == {"F^2", "F*G", "F*H", "G^2", "G*H", "H^2", "D_2"}

    def test_r_plus_2(self, p5114):
        b = sympow_basis(5, p5114)
        assert b.provenance is Provenance.TYPE1_PRIME_R_PLUS_2
        # every generator is a product from P^(4) P or P^(3) P^(2)
        assert all("D_" in lab or lab.count("^") + lab.count("*") >= 1 for lab in b.labels)
        with pytest.raises(LevelOutOfRange):
            sympow_basis(6, p5114)

    @pytest.mark.parametrize("e", type1_prime_fixtures(), ids=fixture_id)
    def test_generators_in_kernel(self, e):
        w = weights_of(e)
        for level in range(r_index(e) + 3):
            for g in sympow_basis(level, e):
                if level:
                    assert substitute_powers(g, w) == {}

    def test_type2_level_cap(self):
        with pytest.raises(LevelOutOfRange):
            sympow_basis(4, exps(TYPE2_CURVE))

    def test_type2_provenance_by_field(self):
        e = exps(TYPE2_CURVE)
        assert sympow_basis(3, e).provenance is Provenance.TYPE2_THIRD
        assert sympow_basis(3, e, F2).provenance is Provenance.TYPE2_THIRD_CHAR2

    def test_third_inside_square(self, p5114):
        w = weights_of(p5114)
        b = sympow_basis(3, p5114)
        P = IdealGens(fgh(p5114), w)
        assert contained(IdealGens(b.generators, w, b.labels), ideal_power(P, 2))

    def test_type1_non_prime_third(self):
        # type 1 with b1 > b2 uses the D_3, D'_3 basis
        e = classify((1, 3, 2, 1, 2, 1))
        assert e.type_tag is MatrixType.TYPE1
        b = sympow_basis(3, e)
        assert b.provenance is Provenance.TYPE1_THIRD
        assert {"D_3", "D_3'"} <= set(b.labels)


def test_d_values_lie_in_kernel():
    for e in type1_prime_fixtures():
        w = weights_of(e)
        for l in range(r_index(e) + 2):
            assert substitute_powers(d_poly(l, e).value, w) == ({} if l else {w.degree((0, e.b2, 0)): -1})


def test_field_parametrised_recursion(p5114):
    f = FieldSpec(7)
    d3 = d_poly(3, p5114, f).value
    assert d3 == Poly.parse(D3, f)
    square = ideal_power(IdealGens(fgh(p5114, f), weights_of(p5114)), 2)
    assert is_member(d3, square)
    assert not is_member(d3, m_multiples(square, 1))
