"""Membership and containment for weighted-homogeneous ideals.

Every ideal handled here is generated by polynomials that are homogeneous for
a fixed weighting of x, y, z.  Deciding ``f in I`` then splits into finitely
many finite-dimensional problems: the degree-``d`` part of ``I`` is spanned by
``m * g`` with ``g`` a generator and ``m`` a monomial of degree
``d - deg g``.  Each such span is put in echelon form once (fraction-free over
the rationals) and cached on the ideal.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .polyring import FieldSpec, NonHomogeneous, Poly, Weights, weighted_degree


class WeightMismatch(ValueError):
    pass


class CertificateError(ArithmeticError):
    """A certificate failed to re-expand to the polynomial it certifies."""


# -- labels ------------------------------------------------------------------

_FACTOR = re.compile(r"^(.*?)(?:\^(\d+))?$")


def _atom_key(name: str):
    if name in ("x", "y", "z"):
        return (0, "xyz".index(name), "")
    if name in ("F", "G", "H"):
        return (1, "FGH".index(name), "")
    if name.startswith("D_"):
        digits = re.match(r"D_(\d+)", name)
        if digits:
            return (2, int(digits.group(1)), name)
    return (3, 0, name)


def _parse_label(label: str) -> Counter:
    counts: Counter = Counter()
    if label in ("", "1"):
        return counts
    for factor in label.split("*"):
        name, power = _FACTOR.match(factor).groups()
        counts[name] += int(power) if power else 1
    return counts


def _format_label(counts: Counter) -> str:
    if not counts:
        return "1"
    return "*".join(
        name if e == 1 else f"{name}^{e}" for name, e in sorted(counts.items(), key=lambda t: _atom_key(t[0]))
    )


def join_labels(*labels: str) -> str:
    total: Counter = Counter()
    for lab in labels:
        total.update(_parse_label(lab))
    return _format_label(total)


def monomial_label(m) -> str:
    return _format_label(Counter({v: e for v, e in zip("xyz", m) if e}))


# -- data types --------------------------------------------------------------


@dataclass(frozen=True)
class IdealGens:
    """A finite list of nonzero weighted-homogeneous generators."""

    generators: tuple
    weights: Weights
    labels: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        fields = {g.field for g in gens}
        if len(fields) != 1:
            raise ValueError("generators live over different fields")
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator")
            weighted_degree(g, self.weights)  # raises NonHomogeneous
        labels = tuple(self.labels) or tuple(f"g{i}" for i in range(len(gens)))
        if len(labels) != len(gens):
            raise ValueError("one label per generator")
        object.__setattr__(self, "labels", labels)

    @property
    def field(self) -> FieldSpec:
        return self.generators[0].field

    @property
    def degrees(self) -> tuple:
        if "degrees" not in self._cache:
            self._cache["degrees"] = tuple(weighted_degree(g, self.weights) for g in self.generators)
        return self._cache["degrees"]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class MembershipCertificate:
    """Cofactors ``h`` with ``f == sum(h[i] * generators[i])``."""

    generators: tuple
    cofactors: tuple
    labels: tuple = ()

    def expand(self) -> Poly:
        total = Poly.zero(self.generators[0].field)
        for h, g in zip(self.cofactors, self.generators):
            if h:
                total = total + h * g
        return total

    def verify(self, f: Poly) -> "MembershipCertificate":
        if self.expand() != f:
            raise CertificateError(f"certificate does not re-expand to {f}")
        return self

    def nonzero_terms(self):
        return [(lab, h) for lab, h in zip(self.labels, self.cofactors) if h]


@dataclass(frozen=True)
class NotMember:
    """``f`` is not in the ideal: the degree-``degree`` residual is nonzero."""

    residual: Poly
    pivot: tuple
    degree: int

    def __bool__(self):
        return False


@dataclass(frozen=True)
class ContainmentVerdict:
    contained: bool
    certificates: tuple = ()
    witness: Poly | None = None
    witness_label: str | None = None
    witness_degree: int | None = None
    refutation: NotMember | None = None

    def __bool__(self):
        return self.contained


# -- graded pieces -----------------------------------------------------------


@lru_cache(maxsize=4096)
def monomials_of_wdegree(d: int, w: Weights) -> tuple:
    """All exponent triples of weighted degree ``d``, in descending lex order."""
    if d < 0:
        return ()
    n1, n2, n3 = w
    out = []
    for i in range(d // n1, -1, -1):
        rest = d - i * n1
        for j in range(rest // n2, -1, -1):
            k, r = divmod(rest - j * n2, n3)
            if r == 0:
                out.append((i, j, k))
    return tuple(out)


def monomials_of_degree(delta: int) -> tuple:
    """Exponent triples of ordinary total degree ``delta``."""
    return monomials_of_wdegree(delta, Weights(1, 1, 1))


def _to_vector(p: Poly, fld: FieldSpec):
    """Integral copy of ``p`` over Q (with its scale factor), plain copy over GF(p)."""
    if fld.p is None:
        den = 1
        for c in p.terms.values():
            if isinstance(c, Fraction):
                den = math.lcm(den, c.denominator)
        if den == 1:
            return dict(p.terms), 1
        return {m: int(c * den) for m, c in p.terms.items()}, den
    return dict(p.terms), 1


class _Echelon:
    """Echelon basis of the degree-d part of an ideal, with column bookkeeping."""

    def __init__(self, ideal: IdealGens, d: int):
        self.field = ideal.field
        self.columns = []  # (generator index, monomial)
        self.basis = {}  # pivot monomial -> (vector, combination)
        for gi, (g, dg) in enumerate(zip(ideal.generators, ideal.degrees)):
            for m in monomials_of_wdegree(d - dg, ideal.weights):
                col = len(self.columns)
                self.columns.append((gi, m))
                vec, den = _to_vector(g.shift(m), self.field)
                v, combo = self.reduce(vec, {col: den})
                if v:
                    self.basis[max(v)] = (v, combo)

    def _primitive(self, v, combo):
        if self.field.p is not None:
            return v, combo
        g = 0
        for c in v.values():
            g = math.gcd(g, c)
        for c in combo.values():
            g = math.gcd(g, c)
        if g > 1:
            v = {m: c // g for m, c in v.items()}
            combo = {k: c // g for k, c in combo.items()}
        return v, combo

    def reduce(self, v, combo):
        """Fraction-free reduction; keeps ``v == sum(combo[k] * column_k)``."""
        co = self.field.coerce
        while v:
            p = max(v)
            hit = self.basis.get(p)
            if hit is None:
                break
            bv, bc = hit
            a, c = bv[p], v[p]
            nv = {m: co(a * x) for m, x in v.items()}
            for m, x in bv.items():
                s = co(nv.get(m, 0) - c * x)
                if s:
                    nv[m] = s
                else:
                    nv.pop(m, None)
            nc = {k: co(a * x) for k, x in combo.items()}
            for k, x in bc.items():
                s = co(nc.get(k, 0) - c * x)
                if s:
                    nc[k] = s
                else:
                    nc.pop(k, None)
            v, combo = self._primitive(nv, nc)
        return v, combo


def _echelon(ideal: IdealGens, d: int) -> _Echelon:
    key = ("echelon", d)
    ech = ideal._cache.get(key)
    if ech is None:
        ech = ideal._cache[key] = _Echelon(ideal, d)
    return ech


_TARGET = -1  # combination index standing for the polynomial being tested


def component_membership(f: Poly, ideal: IdealGens):
    """Certificate of ``f in ideal`` or a NotMember refutation.

    Inhomogeneous ``f`` is tested one weighted-degree component at a time.
    """
    fld = ideal.field
    if f.field != fld:
        raise ValueError(f"polynomial over {f.field}, ideal over {fld}")
    w = ideal.weights
    cof = [dict() for _ in ideal.generators]
    for d, comp in sorted(f.homogeneous_components(w).items()):
        ech = _echelon(ideal, d)
        vec, den = _to_vector(comp, fld)
        v, combo = ech.reduce(vec, {_TARGET: den})
        if v:
            residual = Poly({m: fld.div(c, combo[_TARGET]) for m, c in v.items()}, fld)
            return NotMember(residual=residual, pivot=max(v), degree=d)
        scale = combo.pop(_TARGET)
        # 0 == scale * f_d + sum(combo[k] * column_k)
        for k, c in combo.items():
            gi, m = ech.columns[k]
            cof[gi][m] = fld.coerce(cof[gi].get(m, 0) + fld.div(-c, scale))
    cert = MembershipCertificate(
        generators=ideal.generators,
        cofactors=tuple(Poly(c, fld) for c in cof),
        labels=ideal.labels,
    )
    return cert.verify(f)


def is_member(f: Poly, ideal: IdealGens) -> bool:
    return isinstance(component_membership(f, ideal), MembershipCertificate)


def _check_weights(*ideals):
    ws = {i.weights for i in ideals}
    if len(ws) != 1:
        raise WeightMismatch(f"ideals carry different weights: {sorted(map(tuple, ws))}")
    fs = {i.field for i in ideals}
    if len(fs) != 1:
        raise ValueError(f"ideals live over different fields: {sorted(map(str, fs))}")


def ideal_product(a: IdealGens, b: IdealGens) -> IdealGens:
    """Pairwise products of generators, deduplicated up to nonzero scalars."""
    _check_weights(a, b)
    gens, labels, seen = [], [], set()
    for g, lg in zip(a.generators, a.labels):
        for h, lh in zip(b.generators, b.labels):
            q = g * h
            key = q.monic()
            if key not in seen:
                seen.add(key)
                gens.append(q)
                labels.append(join_labels(lg, lh))
    return IdealGens(tuple(gens), a.weights, tuple(labels))


def unit_ideal(weights: Weights, fld: FieldSpec) -> IdealGens:
    return IdealGens((Poly.constant(1, fld),), weights, ("1",))


def ideal_power(ideal: IdealGens, n: int) -> IdealGens:
    out = unit_ideal(ideal.weights, ideal.field)
    for _ in range(n):
        out = ideal_product(out, ideal)
    return out


def ideal_sum(*ideals: IdealGens) -> IdealGens:
    _check_weights(*ideals)
    gens, labels, seen = [], [], set()
    for i in ideals:
        for g, lab in zip(i.generators, i.labels):
            key = g.monic()
            if key not in seen:
                seen.add(key)
                gens.append(g)
                labels.append(lab)
    return IdealGens(tuple(gens), ideals[0].weights, tuple(labels))


def m_multiples(ideal: IdealGens, delta: int) -> IdealGens:
    """Generators of ``(x, y, z)^delta * ideal``."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if delta == 0:
        return ideal
    gens, labels = [], []
    for m in monomials_of_degree(delta):
        for g, lab in zip(ideal.generators, ideal.labels):
            gens.append(g.shift(m))
            labels.append(join_labels(monomial_label(m), lab))
    return IdealGens(tuple(gens), ideal.weights, tuple(labels))


def _membership_task(args):
    f, ideal = args
    return component_membership(f, ideal)


def contained(a: IdealGens, b: IdealGens, jobs: int = 1) -> ContainmentVerdict:
    """Decide ``a <= b`` generator by generator.

    On failure the first failing generator of ``a`` (in order) is the
    witness.  ``jobs > 1`` farms the membership tests out to processes; the
    verdict does not depend on it.
    """
    _check_weights(a, b)
    if jobs > 1 and len(a) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_membership_task, [(g, b) for g in a.generators]))
    else:
        results = []
        for g in a.generators:
            res = component_membership(g, b)
            results.append(res)
            if isinstance(res, NotMember):
                break
    certs = []
    for g, lab, res in zip(a.generators, a.labels, results):
        if isinstance(res, NotMember):
            # re-check the refutation from scratch before reporting it
            fresh = IdealGens(b.generators, b.weights, b.labels)
            if isinstance(component_membership(g, fresh), MembershipCertificate):
                raise CertificateError(f"inconsistent refutation for {lab}")
            return ContainmentVerdict(
                contained=False,
                witness=g,
                witness_label=lab,
                witness_degree=weighted_degree(g, a.weights),
                refutation=res,
            )
        certs.append(res)
    return ContainmentVerdict(contained=True, certificates=tuple(certs))


__all__ = [
    "CertificateError",
    "ContainmentVerdict",
    "IdealGens",
    "MembershipCertificate",
    "NonHomogeneous",
    "NotMember",
    "WeightMismatch",
    "component_membership",
    "contained",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_member",
    "join_labels",
    "m_multiples",
    "monomials_of_wdegree",
    "unit_ideal",
]
