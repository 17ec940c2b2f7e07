"""Sparse exact polynomials in x, y, z over the rationals or a prime field.

A polynomial is an immutable map from exponent triples ``(i, j, k)`` (for
``x^i y^j z^k``) to nonzero coefficients.  Rational coefficients are kept as
``int`` when integral and as ``fractions.Fraction`` otherwise; prime-field
coefficients are ints in ``range(p)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple  # (i, j, k), all >= 0
Coeff = Union[int, Fraction]

VARIABLES = ("x", "y", "z")
ONE_MONOMIAL = (0, 0, 0)


class FieldMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised by exact division when some term is not divisible."""

    def __init__(self, term, divisor):
        self.term = term
        self.divisor = divisor
        super().__init__(f"term {term} is not divisible by {divisor}")


class NonHomogeneous(ValueError):
    def __init__(self, first, second):
        self.terms = (first, second)
        super().__init__(f"terms {first} and {second} have different weighted degrees")


class ZeroPolynomial(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"{self.p!r} is not a prime")
            if self.p >= 2**61:
                raise ValueError("prime fields are limited to p < 2**61")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"q"`` or ``"fp:<p>"``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls()
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; expected 'q' or 'fp:<p>'")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def coerce(self, c) -> Coeff:
        if self.p is None:
            if isinstance(c, Fraction):
                return c.numerator if c.denominator == 1 else c
            if isinstance(c, int):
                return c
            raise TypeError(f"cannot coerce {c!r} into the rationals")
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def div(self, a: Coeff, b: Coeff) -> Coeff:
        if b == 0:
            raise ZeroDivisionError("division by zero in coefficient field")
        if self.p is None:
            return self.coerce(Fraction(a) / b)
        return a * pow(b, -1, self.p) % self.p

    def __str__(self):
        return "q" if self.p is None else f"fp:{self.p}"


QQ = FieldSpec()


@dataclass(frozen=True)
class Weights:
    """Weighted degrees of x, y, z."""

    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        for n in self:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"weights must be positive integers, got {tuple(self)}")

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3))

    def normalized(self) -> "Weights":
        g = math.gcd(self.n1, self.n2, self.n3)
        return Weights(self.n1 // g, self.n2 // g, self.n3 // g)

    def degree(self, m: Monomial) -> int:
        return m[0] * self.n1 + m[1] * self.n2 + m[2] * self.n3


def term_key(m: Monomial):
    """Sort key for printing: ascending z, then ascending y, then descending x."""
    return (m[2], m[1], -m[0])


def variable_index(v) -> int:
    if isinstance(v, int):
        if v in (0, 1, 2):
            return v
    elif v in VARIABLES:
        return VARIABLES.index(v)
    raise ValueError(f"unknown variable {v!r}")


class Poly:
    """Immutable sparse polynomial in x, y, z."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None, field: FieldSpec = QQ):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != 3 or any(e < 0 for e in m):
                raise ValueError(f"bad exponent triple {m!r}")
            c = field.coerce(c)
            if c:
                clean[m] = field.coerce(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self.field = field
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, field: FieldSpec) -> "Poly":
        # trusted constructor: terms already canonical and zero-free
        p = object.__new__(cls)
        p.field = field
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: Monomial, coeff: Coeff = 1, field: FieldSpec = QQ) -> "Poly":
        return cls({tuple(m): coeff}, field)

    @classmethod
    def constant(cls, c: Coeff, field: FieldSpec = QQ) -> "Poly":
        return cls({ONE_MONOMIAL: c}, field)

    @classmethod
    def zero(cls, field: FieldSpec = QQ) -> "Poly":
        return cls._raw({}, field)

    # -- arithmetic ---------------------------------------------------------

    def _coerce_other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.coerce(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out, f)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly._raw({m: f.coerce(-c) for m, c in self.terms.items()}, f)

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "Poly":
        f = self.field
        c = f.coerce(c)
        if not c:
            return Poly.zero(f)
        return Poly._raw({m: f.coerce(v * c) for m, v in self.terms.items()}, f)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        f = self.field
        out: dict = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                m = (a1 + a2, b1 + b2, c1 + c2)
                out[m] = out.get(m, 0) + u * v
        return Poly._raw({m: f.coerce(c) for m, c in out.items() if f.coerce(c)}, f)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, m: Monomial, coeff: Coeff = 1) -> "Poly":
        """Multiply by the monomial ``coeff * x^m[0] y^m[1] z^m[2]``."""
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m!r}; use exact_div_monomial")
        f = self.field
        coeff = f.coerce(coeff)
        if not coeff:
            return Poly.zero(f)
        a, b, c = m
        return Poly._raw(
            {(i + a, j + b, k + c): f.coerce(v * coeff) for (i, j, k), v in self.terms.items()}, f
        )

    # -- comparison and inspection -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.field)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]))

    def monic(self) -> "Poly":
        """Scale so that the first printed term has coefficient 1."""
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        return self.scale(self.field.div(1, lead))

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def rename(self, perm) -> "Poly":
        """Send variable ``v`` to variable ``perm[v]``."""
        out = {}
        for m, c in self.terms.items():
            new = [0, 0, 0]
            for v, e in enumerate(m):
                new[perm[v]] = e
            out[tuple(new)] = c
        return Poly._raw(out, self.field)

    def homogeneous_components(self, w: Weights) -> dict:
        comps: dict = {}
        for m, c in self.terms.items():
            comps.setdefault(w.degree(m), {})[m] = c
        return {d: Poly._raw(t, self.field) for d, t in comps.items()}

    # -- text ------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = self._is_negative(c)
            mag = self.field.coerce(-c) if neg and self.field.p is None else c
            if self.field.p is not None:
                neg = False
            vars_ = [
                VARIABLES[v] if e == 1 else f"{VARIABLES[v]}^{e}" for v, e in enumerate(m) if e
            ]
            if not vars_:
                body = str(mag)
            elif mag == 1:
                body = "*".join(vars_)
            else:
                body = "*".join([str(mag)] + vars_)
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def _is_negative(self, c) -> bool:
        return self.field.p is None and c < 0

    def __repr__(self):
        return f"Poly({str(self)!r}, field={self.field})"

    @classmethod
    def parse(cls, text: str, field: FieldSpec = QQ) -> "Poly":
        """Parse the canonical text format, e.g. ``"y^2 - x^2*z^3"``."""
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        tokens = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sign + body for sign, body in tokens) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        terms: dict = {}
        for sign, body in tokens:
            coeff: Coeff = 1
            exps = [0, 0, 0]
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if factor[0] in VARIABLES:
                    name, caret, power = factor.partition("^")
                    if name not in VARIABLES:
                        raise ValueError(f"unknown variable {name!r}")
                    if caret and not power.isdigit():
                        raise ValueError(f"bad exponent in {factor!r}")
                    exps[VARIABLES.index(name)] += int(power) if caret else 1
                else:
                    coeff *= Fraction(factor)
            if sign == "-":
                coeff = -coeff
            m = tuple(exps)
            terms[m] = terms.get(m, 0) + coeff
        return cls(terms, field)


def variables(field: FieldSpec = QQ):
    """The generators ``x, y, z`` as polynomials."""
    return tuple(Poly.monomial(m, 1, field) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def mono(i: int, j: int, k: int, field: FieldSpec = QQ, coeff: Coeff = 1) -> Poly:
    return Poly.monomial((i, j, k), coeff, field)


def exact_div_monomial(p: Poly, m: Monomial) -> Poly:
    """Return q with ``q * x^m = p``; raise NotDivisible otherwise."""
    a, b, c = m
    if not (a or b or c):
        return p
    out = {}
    for t, coeff in p.sorted_terms():
        i, j, k = t
        if i < a or j < b or k < c:
            raise NotDivisible(t, tuple(m))
        out[(i - a, j - b, k - c)] = coeff
    return Poly._raw(out, p.field)


def weighted_degree(p: Poly, w: Weights) -> int:
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weighted degree")
    items = p.sorted_terms()
    first = items[0][0]
    d = w.degree(first)
    for m, _ in items[1:]:
        if w.degree(m) != d:
            raise NonHomogeneous(first, m)
    return d


def is_homogeneous(p: Poly, w: Weights) -> bool:
    return len({w.degree(m) for m in p.terms}) <= 1


def substitute_powers(p: Poly, w: Weights) -> dict:
    """Image under x -> t^n1, y -> t^n2, z -> t^n3, as ``{exponent: coeff}``."""
    f = p.field
    out: dict = {}
    for m, c in p.terms.items():
        d = w.degree(m)
        out[d] = f.coerce(out.get(d, 0) + c)
    return {d: c for d, c in sorted(out.items()) if c}


def reduce_mod_variable(p: Poly, v) -> Poly:
    """Drop every term with a positive power of ``v``."""
    idx = variable_index(v)
    return Poly._raw({m: c for m, c in p.terms.items() if m[idx] == 0}, p.field)


def products(left: Iterable, right: Iterable) -> list:
    """Pairwise products of two polynomial lists, deduplicated up to scalars."""
    out, seen = [], set()
    for a in left:
        for b in right:
            q = a * b
            key = q.monic()
            if q and key not in seen:
                seen.add(key)
                out.append(q)
    return out
