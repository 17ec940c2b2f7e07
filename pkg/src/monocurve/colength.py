"""Colengths of two-variable monomial quotients and the length criterion.

For a type 1' matrix with b = b1 = b2, an ideal B inside the l-th symbolic
power equals it as soon as R/(B + (x)) has length binom(l+1, 2)(c1 + 2c2)b,
or R/(B + (z)) has length binom(l+1, 2)(2a1 + a2)b.  When B reduces to a
monomial ideal in the two remaining variables that length is a staircase
count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .curvegen import MatrixExponents, MatrixType, WrongType, r_index, weights_of
from .gradedmembership import IdealGens, ideal_power, is_member
from .polyring import QQ, FieldSpec, Poly, reduce_mod_variable, variable_index
from .sympow import d_poly, fgh


class MalformedStaircase(ValueError):
    pass


class NonMonomialReduction(ValueError):
    def __init__(self, generator, reduction):
        self.generator = generator
        self.reduction = reduction
        super().__init__(f"{generator} reduces to the non-monomial {reduction}")


class NotArtinian(ValueError):
    pass


class Inconclusive(Exception):
    """Neither reduction variable yields a monomial ideal."""


@dataclass(frozen=True)
class Staircase:
    """Corners ``(u_i, v_i)`` of the ideal generated by ``s^u_i t^v_i``.

    ``u_0 >= ... >= u_(n-1) > u_n = 0`` and ``v_0 = 0 < v_1 <= ... <= v_n``.
    """

    pairs: tuple

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs or any(len(p) != 2 or min(p) < 0 for p in pairs):
            raise MalformedStaircase(f"bad corner list {pairs}")
        us = [p[0] for p in pairs]
        vs = [p[1] for p in pairs]
        if us[-1] != 0 or vs[0] != 0:
            raise MalformedStaircase(f"{pairs}: need u_n = 0 and v_0 = 0")
        if len(pairs) == 1:
            return
        if any(a < b for a, b in zip(us, us[1:])) or us[-2] <= 0:
            raise MalformedStaircase(f"{pairs}: u must decrease to 0")
        if vs[1] <= 0 or any(a > b for a, b in zip(vs, vs[1:])):
            raise MalformedStaircase(f"{pairs}: v must increase from 0")


def staircase_length(s: Staircase) -> int:
    """``sum u_i (v_(i+1) - v_i)``: the number of monomials outside the ideal."""
    p = s.pairs
    return sum(p[i][0] * (p[i + 1][1] - p[i][1]) for i in range(len(p) - 1))


def staircase_from_monomials(monos) -> Staircase:
    """Minimalize exponent pairs and assemble their staircase."""
    kept = []
    best_v = None
    for u, v in sorted(set(monos)):
        if best_v is None or v < best_v:
            kept.append((u, v))
            best_v = v
    kept.reverse()
    if not kept or kept[0][1] != 0 or kept[-1][0] != 0:
        raise NotArtinian(f"monomial ideal {kept} lacks a pure power on some axis")
    return Staircase(tuple(kept))


def reduce_and_monomialize(gens, v) -> Staircase:
    """Reduce generators modulo variable ``v`` and read off the staircase.

    The corner coordinates refer to the remaining two variables in the order
    x, y, z.
    """
    idx = variable_index(v)
    rest = [i for i in range(3) if i != idx]
    monos = []
    for g in gens:
        red = reduce_mod_variable(g, idx)
        if red.is_zero():
            continue
        if not red.is_term():
            raise NonMonomialReduction(g, red)
        (m,) = red.terms
        monos.append((m[rest[0]], m[rest[1]]))
    return staircase_from_monomials(monos)


def length_target(level: int, e: MatrixExponents, v) -> int:
    b = e.b1
    if variable_index(v) == 0:
        return comb(level + 1, 2) * (e.c1 + 2 * e.c2) * b
    if variable_index(v) == 2:
        return comb(level + 1, 2) * (2 * e.a1 + e.a2) * b
    raise ValueError("the length criterion reduces modulo x or z")


def _require_type1_prime(e):
    if e.type_tag is not MatrixType.TYPE1_PRIME:
        raise WrongType(f"expected a type 1' matrix, got {e.type_tag.value}")


def proof_generating_set(level: int, e: MatrixExponents, field: FieldSpec = QQ) -> IdealGens:
    """The explicit generators used to identify the ``level``-th symbolic power.

    Valid for 1 <= level <= r + 2.  Case 1 (a2 > (r-1)a1) adds the D_(r+1)
    terms that are checked modulo x; Case 2 works modulo z without them.
    """
    _require_type1_prime(e)
    r = r_index(e)
    if not 1 <= level <= r + 2:
        raise ValueError(f"level {level} outside 1..{r + 2}")
    w = weights_of(e)
    case1 = e.a2 > (r - 1) * e.a1
    F, G, H = fgh(e, field)

    def D(n):
        return d_poly(n, e, field).value

    def gh(i, j):
        lab = "*".join(s for s in (_pw("G", i), _pw("H", j)) if s)
        return G**i * H**j, lab

    pairs = []
    if level <= r:
        pairs.append((D(level), f"D_{level}"))
        pairs += [gh(level - j, j) for j in range(level + 1)]
    elif level == r + 1:
        dr = D(r)
        pairs += [(F * dr, f"F*D_{r}"), (H * dr, f"H*D_{r}"), (G * dr, f"G*D_{r}")]
        if case1:
            pairs.append((D(r + 1), f"D_{r + 1}"))
        pairs += [gh(level - j, j) for j in range(1, level + 1)]
    else:
        dr = D(r)
        pairs += [
            (D(2) * dr, f"D_2*D_{r}" if r != 2 else "D_2^2"),
            (H * H * dr, f"H^2*D_{r}"),
            (G * H * dr, f"G*H*D_{r}"),
            (G * G * dr, f"G^2*D_{r}"),
        ]
        if case1:
            pairs += [(H * D(r + 1), f"H*D_{r + 1}"), (G * D(r + 1), f"G*D_{r + 1}")]
        pairs += [gh(level - j, j) for j in range(2, level + 1)]
    gens, labels = zip(*pairs)
    return IdealGens(gens, w, labels)


def _pw(name, k):
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def certify_inside_symbolic_power(g: Poly, level: int, e: MatrixExponents, power: IdealGens) -> bool:
    """``g`` lies in the symbolic power if z^((l-1)c2) g or x^((l-1)a1) g lies in P^l."""
    if is_member(g.shift((0, 0, (level - 1) * e.c2)), power):
        return True
    return is_member(g.shift(((level - 1) * e.a1, 0, 0)), power)


def _axis_matches(B: IdealGens, level, e, v):
    """True/False for a decided axis, None when the reduction is not monomial."""
    try:
        stairs = reduce_and_monomialize(B.generators, v)
    except NonMonomialReduction:
        return None
    except NotArtinian:
        return False
    return staircase_length(stairs) == length_target(level, e, v)


def verify_symbolic_equality(B: IdealGens, level: int, e: MatrixExponents) -> bool:
    """Decide whether ``B`` generates the ``level``-th symbolic power.

    Requires every generator of B to be certified inside the symbolic power
    and the colength of B + (x) or B + (z) to hit its target.  Raises
    Inconclusive when neither reduction is monomial and no other check failed.
    """
    _require_type1_prime(e)
    axes = [_axis_matches(B, level, e, v) for v in ("x", "z")]
    if True not in axes and False in axes:
        return False
    F, G, H = fgh(e, B.field)
    power = ideal_power(IdealGens((F, G, H), B.weights, ("F", "G", "H")), level)
    inside = all(certify_inside_symbolic_power(g, level, e, power) for g in B.generators)
    if not inside:
        return False
    if True in axes:
        return True
    raise Inconclusive(f"no monomial reduction of B at level {level}")
