"""Explicit generators of symbolic powers of I_2(M).

For a type 1 matrix the distinguished elements are produced by

    D_0 = -y^b2,
    D_n = x^alpha_n z^(gamma_n - c2) (H D_(n-1) - x^(a2-(n-1)a1) y^((n-1)(b1-b2)) G^n),

with alpha_n = max(0, (n-1)a1 - a2) and gamma_n = max(0, (n-1)c2 - c1).  The
formal negative powers are resolved by combining the x factors before
multiplying and by exact division by the z power.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .curvegen import MatrixExponents, MatrixType, WrongType, r_index
from .gradedmembership import MembershipCertificate, join_labels
from .polyring import QQ, FieldSpec, Poly, exact_div_monomial, mono


class LevelOutOfRange(ValueError):
    pass


class Provenance(enum.Enum):
    POWERS_ONLY = "PowersOnly"
    SCHENZEL_D2 = "SchenzelD2"
    TYPE1_THIRD = "Type1Third"
    TYPE2_THIRD = "Type2Third"
    TYPE2_THIRD_CHAR2 = "Type2ThirdChar2"
    TYPE1_PRIME_LOW = "Type1PrimeLow"
    TYPE1_PRIME_R_PLUS_1 = "Type1PrimeRPlus1"
    TYPE1_PRIME_R_PLUS_2 = "Type1PrimeRPlus2"


@dataclass(frozen=True)
class DPoly:
    level: int
    value: Poly
    alpha: int
    gamma: int


@dataclass(frozen=True)
class SymbolicPowerBasis:
    level: int
    generators: tuple
    labels: tuple
    provenance: Provenance

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _is_type1(e: MatrixExponents) -> bool:
    return e.type_tag in (MatrixType.TYPE1, MatrixType.TYPE1_PRIME)


def fgh(e: MatrixExponents, field: FieldSpec = QQ):
    """The three minors F, G, H; ``e`` may also be a bare exponent 6-tuple."""
    a1, a2, b1, b2, c1, c2 = e.raw if isinstance(e, MatrixExponents) else tuple(e)
    F = mono(0, b1 + b2, 0, field) - mono(a2, 0, c1, field)
    G = mono(0, 0, c1 + c2, field) - mono(a1, b2, 0, field)
    H = mono(a1 + a2, 0, 0, field) - mono(0, b1, c2, field)
    return F, G, H


def _mul_z_power(p: Poly, k: int) -> Poly:
    """Multiply by z^k for any integer k, dividing exactly when k < 0."""
    if k >= 0:
        return p.shift((0, 0, k))
    return exact_div_monomial(p, (0, 0, -k))


def _level_cap(e: MatrixExponents) -> int:
    return e.a2 // e.a1 + 2  # r + 1


def d_poly(level: int, e: MatrixExponents, field: FieldSpec = QQ) -> DPoly:
    """D_level by the recursion, for type 1 matrices and 0 <= level <= r + 1."""
    if not _is_type1(e):
        raise WrongType(f"the D recursion is stated for type 1 matrices, not {e.type_tag.value}")
    if level < 0 or level > _level_cap(e):
        raise LevelOutOfRange(f"level {level} outside 0..{_level_cap(e)}")
    return _d_chain(e, field)[level]


@lru_cache(maxsize=256)
def _d_chain(e: MatrixExponents, field: FieldSpec):
    a1, a2, b1, b2, c1, c2 = e.raw
    F, G, H = fgh(e, field)
    chain = [DPoly(0, -mono(0, b2, 0, field), 0, 0)]
    prev = chain[0].value
    for n in range(1, _level_cap(e) + 1):
        alpha = max(0, (n - 1) * a1 - a2)
        gamma = max(0, (n - 1) * c2 - c1)
        g_shift = alpha + a2 - (n - 1) * a1  # >= 0 by the choice of alpha
        inner = (H * prev).shift((alpha, 0, 0)) - (G**n).shift((g_shift, (n - 1) * (b1 - b2), 0))
        value = _mul_z_power(inner, gamma - c2)
        chain.append(DPoly(n, value, alpha, gamma))
        prev = value
    return tuple(chain)


def _cert(f: Poly, gens, labels, cofactors) -> MembershipCertificate:
    return MembershipCertificate(tuple(gens), tuple(cofactors), tuple(labels)).verify(f)


def d2_general(e: MatrixExponents, field: FieldSpec = QQ):
    """D_2 with its certificate ``D_2 in m P`` over (F, G, H); types 1 and 2."""
    a1, a2, b1, b2, c1, c2 = e.raw
    if not (a1 <= a2 and b1 >= b2 and c1 >= c2) and not (a1 > a2 and b1 > b2 and c1 > c2):
        raise WrongType(f"{e.raw} is neither type 1 nor type 2")
    F, G, H = fgh(e, field)
    alpha = max(0, a1 - a2)
    inner = (H * F).shift((alpha, 0, 0)) - (G * G).shift((alpha + a2 - a1, b1 - b2, 0))
    d2 = exact_div_monomial(inner, (0, 0, c2))
    cofactors = (
        -mono(alpha, b1, 0, field),
        -mono(alpha + a2 - a1, b1 - b2, c1, field),
        -mono(alpha + a2, 0, c1 - c2, field),
    )
    return d2, _cert(d2, (F, G, H), ("F", "G", "H"), cofactors)


QUAD_LABELS_TYPE1 = ("F^2", "G^2", "H^2", "G*H")
QUAD_LABELS_TYPE2 = ("F^2", "G^2", "H^2", "F*G")


def d3_type1(e: MatrixExponents, field: FieldSpec = QQ):
    """D_3 and D'_3 for a type 1 matrix, each with a certificate over F^2, G^2, H^2, GH."""
    if not _is_type1(e):
        raise WrongType(f"expected a type 1 matrix, got {e.type_tag.value}")
    a1, a2, b1, b2, c1, c2 = e.raw
    F, G, H = fgh(e, field)
    alpha = max(0, 2 * a1 - a2)
    beta = max(0, 2 * b2 - b1)
    gamma = max(0, 2 * c2 - c1)
    d2, _ = d2_general(e, field)

    inner = (H * d2).shift((alpha, 0, 0)) - (G**3).shift((alpha + a2 - 2 * a1, 2 * b1 - 2 * b2, 0))
    d3 = _mul_z_power(inner, gamma - c2)
    inner = (H * d2).shift((0, beta, 0)) + (F * G * G).shift((a2 - a1, beta + b1 - 2 * b2, 0))
    d3p = _mul_z_power(inner, gamma - c2)

    gens = (F * F, G * G, H * H, G * H)
    cert = _cert(d3, gens, QUAD_LABELS_TYPE1, (
        mono(alpha, b1 - b2, gamma, field),
        -mono(a2 - 2 * a1 + alpha, 2 * b1 - 2 * b2, c1 + gamma, field),
        -mono(a2 + alpha, 0, c1 - 2 * c2 + gamma, field),
        mono(a2 - a1 + alpha, b1 - b2, c1 - c2 + gamma, field, coeff=-2),
    ))
    cert_p = _cert(d3p, gens, QUAD_LABELS_TYPE1, (
        mono(0, b1 - b2 + beta, gamma, field),
        -mono(2 * a2 - a1, b1 - 2 * b2 + beta, c1 - c2 + gamma, field),
        -mono(a2, beta, c1 - 2 * c2 + gamma, field),
        mono(a2 - a1, b1 - b2 + beta, c1 - c2 + gamma, field, coeff=-2),
    ))
    return d3, d3p, cert, cert_p


# sigma renames x -> y -> z -> x; exponents move along a -> b -> c -> a
SIGMA = (1, 2, 0)


def _type2_core(raw, field):
    """D_3 of a type 2 matrix with its certificate over (F^2, G^2, H^2, FG)."""
    a1, a2, b1, b2, c1, c2 = raw
    F = mono(0, b1 + b2, 0, field) - mono(a2, 0, c1, field)
    G = mono(0, 0, c1 + c2, field) - mono(a1, b2, 0, field)
    H = mono(a1 + a2, 0, 0, field) - mono(0, b1, c2, field)
    alpha = max(0, 2 * a2 - a1)
    beta = max(0, 2 * b2 - b1)
    gamma = max(0, 2 * c2 - c1)
    inner = (H * H * F).shift((alpha + a1 - 2 * a2, beta, 0)) + (G**3).shift((alpha, beta + b1 - 2 * b2, 0))
    d3 = exact_div_monomial(inner, (0, 0, c2))
    gens = (F * F, G * G, H * H, F * G)
    cofactors = (
        mono(a1 - 2 * a2 + alpha, b1 - b2 + beta, c2, field),
        mono(alpha, b1 - 2 * b2 + beta, c1, field),
        -mono(a1 - a2 + alpha, beta, c1 - c2, field),
        mono(a1 - a2 + alpha, b1 - b2 + beta, 0, field, coeff=2),
    )
    return d3, gens, cofactors, (alpha, beta, gamma)


def _apply_sigma(poly: Poly, times: int) -> Poly:
    for _ in range(times):
        poly = poly.rename(SIGMA)
    return poly


def d3_type2(e: MatrixExponents, field: FieldSpec = QQ):
    """Extra level-3 generators of a type 2 matrix with their certificates.

    Returns a list of ``(label, polynomial, certificate)``.  Outside
    characteristic 2 these are D_3 and its two sigma-images, each certified
    over the sigma-image of (F^2, G^2, H^2, FG).  In characteristic 2 it is the
    single generator z^(gamma - c2) D_3, certified over (F^2, G^2, H^2).
    """
    if e.type_tag is not MatrixType.TYPE2:
        raise WrongType(f"expected a type 2 matrix, got {e.type_tag.value}")
    a1, a2, b1, b2, c1, c2 = e.raw
    if field.characteristic == 2:
        d3, gens, _, (alpha, beta, gamma) = _type2_core(e.raw, field)
        value = _mul_z_power(d3, gamma - c2)
        cofactors = (
            -mono(a1 - 2 * a2 + alpha, b1 - b2 + beta, gamma, field),
            -mono(alpha, b1 - 2 * b2 + beta, c1 - c2 + gamma, field),
            mono(a1 - a2 + alpha, beta, c1 - 2 * c2 + gamma, field),
        )
        cert = _cert(value, gens[:3], ("F^2", "G^2", "H^2"), cofactors)
        return [("D_3c", value, cert)]

    out = []
    raw = e.raw
    names = ("D_3", "D_3'", "D_3''")
    # D_3^sigma is D_3 built from the sigma-shifted exponents, then renamed
    for times, name in enumerate(names):
        shifted = raw
        for _ in range(times):
            shifted = _sigma_shift(shifted)
        d3, gens, cofactors, _ = _type2_core(shifted, field)
        value = _apply_sigma(d3, times)
        gens = tuple(_apply_sigma(g, times) for g in gens)
        cofactors = tuple(_apply_sigma(h, times) for h in cofactors)
        labels = tuple(_sigma_label(lab, times) for lab in QUAD_LABELS_TYPE2)
        out.append((name, value, _cert(value, gens, labels, cofactors)))
    return out


def _sigma_shift(raw):
    # exponents e' with sigma(formula(e')) == formula evaluated at sigma(e)
    a1, a2, b1, b2, c1, c2 = raw
    return (b1, b2, c1, c2, a1, a2)


def _sigma_label(label: str, times: int) -> str:
    step = {"F": "G", "G": "H", "H": "F"}
    for _ in range(times):
        label = "".join(step.get(ch, ch) for ch in label)
    return join_labels(label)


def type2_char2_identity(e: MatrixExponents, field: FieldSpec):
    """The three cleared level-3 elements that coincide in characteristic 2.

    Returns ``(x^(alpha-a2) D'_3, y^(beta-b2) D''_3, z^(gamma-c2) D_3)``,
    each computed with exact divisions.
    """
    if e.type_tag is not MatrixType.TYPE2:
        raise WrongType(f"expected a type 2 matrix, got {e.type_tag.value}")
    out = []
    for times in range(3):
        shifted = e.raw
        for _ in range(times):
            shifted = _sigma_shift(shifted)
        d3, _, _, (_, _, gamma) = _type2_core(shifted, field)
        out.append(_apply_sigma(_mul_z_power(d3, gamma - shifted[5]), times))
    # out[0] clears z for D_3, out[1] clears x for D'_3, out[2] clears y for D''_3
    return out[1], out[2], out[0]


def clearing_exponents(level: int, e: MatrixExponents):
    """Monomials x^((l-1)a1) and z^((l-1)c2) carrying D_l into P^l."""
    r = r_index(e)
    if not 1 <= level <= r + 1:
        raise LevelOutOfRange(f"level {level} outside 1..{r + 1}")
    return ((level - 1) * e.a1, 0, 0), (0, 0, (level - 1) * e.c2)


def dual_identity_check(level: int, e: MatrixExponents, field: FieldSpec = QQ) -> bool:
    """Compare the H-form and G-form expressions of D_l after clearing denominators.

    Checks x^a1 (H D_(l-1) - x^(a2-(l-1)a1) G^l) == z^c2 (G D_(l-1) - z^(c1-(l-1)c2) H^l)
    with both sides multiplied by the monomial that makes every exponent
    non-negative.
    """
    r = r_index(e)
    if not 1 <= level <= r + 1:
        raise LevelOutOfRange(f"level {level} outside 1..{r + 1}")
    a1, a2, b1, b2, c1, c2 = e.raw
    F, G, H = fgh(e, field)
    prev = d_poly(level - 1, e, field).value
    ex = a2 - (level - 1) * a1
    ez = c1 - (level - 1) * c2
    cx, cz = max(0, -ex), max(0, -ez)
    lhs = (H * prev).shift((a1 + cx, 0, cz)) - (G**level).shift((a1 + cx + ex, 0, cz))
    rhs = (G * prev).shift((cx, 0, c2 + cz)) - (H**level).shift((cx, 0, c2 + cz + ez))
    return lhs == rhs


# -- generating sets ----------------------------------------------------------


def _products(left, right):
    gens, labels, seen = [], [], set()
    for g, lg in left:
        for h, lh in right:
            q = g * h
            key = q.monic()
            if key not in seen:
                seen.add(key)
                gens.append(q)
                labels.append(join_labels(lg, lh))
    return list(zip(gens, labels))


def _dedupe(pairs):
    out, seen = [], set()
    for g, lab in pairs:
        key = g.monic()
        if key not in seen:
            seen.add(key)
            out.append((g, lab))
    return out


def _ordinary_power(e, field, n):
    F, G, H = fgh(e, field)
    base = [(F, "F"), (G, "G"), (H, "H")]
    out = [(Poly.constant(1, field), "1")]
    for _ in range(n):
        out = _products(out, base)
    return out


def sympow_basis(level: int, e: MatrixExponents, field: FieldSpec = QQ) -> SymbolicPowerBasis:
    """A finite generating set of the ``level``-th symbolic power.

    Covers every level for which an explicit description is available:
    levels 0..3 for every type and levels up to r + 2 for type 1'.
    """
    pairs, prov = _basis_pairs(level, e, field)
    gens, labels = zip(*pairs)
    return SymbolicPowerBasis(level, tuple(gens), tuple(labels), prov)


def _basis_pairs(level, e, field):
    if level < 0:
        raise LevelOutOfRange("negative level")
    if level <= 1:
        return _ordinary_power(e, field, level), Provenance.POWERS_ONLY
    if level == 2:
        d2, _ = d2_general(e, field)
        return _dedupe(_ordinary_power(e, field, 2) + [(d2, "D_2")]), Provenance.SCHENZEL_D2

    if e.type_tag is MatrixType.TYPE1_PRIME:
        r = r_index(e)
        if level > r + 2:
            raise LevelOutOfRange(f"level {level} is beyond r + 2 = {r + 2}")
        if level <= r:
            d = d_poly(level, e, field).value
            return _dedupe(_ordinary_power(e, field, level) + [(d, f"D_{level}")]), Provenance.TYPE1_PRIME_LOW
        P = _ordinary_power(e, field, 1)
        if level == r + 1:
            prev, _ = _basis_pairs(r, e, field)
            d = d_poly(r + 1, e, field).value
            return _dedupe(_products(prev, P) + [(d, f"D_{r + 1}")]), Provenance.TYPE1_PRIME_R_PLUS_1
        prev1, _ = _basis_pairs(r + 1, e, field)
        prev0, _ = _basis_pairs(r, e, field)
        sym2, _ = _basis_pairs(2, e, field)
        return _dedupe(_products(prev1, P) + _products(prev0, sym2)), Provenance.TYPE1_PRIME_R_PLUS_2

    if level > 3:
        raise LevelOutOfRange(f"level {level} > 3 is only available for type 1' matrices")
    sym2, _ = _basis_pairs(2, e, field)
    P = _ordinary_power(e, field, 1)
    base = _products(sym2, P)
    if e.type_tag is MatrixType.TYPE1:
        d3, d3p, _, _ = d3_type1(e, field)
        return _dedupe(base + [(d3, "D_3"), (d3p, "D_3'")]), Provenance.TYPE1_THIRD
    extras = [(value, label) for label, value, _ in d3_type2(e, field)]
    prov = Provenance.TYPE2_THIRD_CHAR2 if field.characteristic == 2 else Provenance.TYPE2_THIRD
    return _dedupe(base + extras), prov


def delta(level: int, e: MatrixExponents) -> int:
    """1 if ``level`` is even or equals r + 1, else 0."""
    r = r_index(e)
    return 1 if level % 2 == 0 or level == r + 1 else 0
