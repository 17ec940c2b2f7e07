"""Herzog matrices of space monomial curves.

The defining ideal of ``k[t^n1, t^n2, t^n3]`` is, outside the complete
intersection case, generated by the 2x2 minors of

    [ x^a1  y^b1  z^c1 ]
    [ z^c2  x^a2  y^b2 ]

This module finds the three minimal relations of the numerical semigroup,
reads off the six exponents and relabels variables into one of the canonical
forms (type 1, type 1', type 2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .polyring import Weights


class CompleteIntersection(Exception):
    """The curve ideal is a complete intersection; there is no Herzog matrix."""


class SearchBoundExceeded(RuntimeError):
    pass


class InconsistentRelations(ValueError):
    pass


class Unclassifiable(ValueError):
    pass


class WrongType(ValueError):
    pass


class MatrixType(enum.Enum):
    TYPE1 = "type1"
    TYPE1_PRIME = "type1prime"
    TYPE2 = "type2"


@dataclass(frozen=True)
class Relation:
    """``k * n[pivot] == coeffs[0] * n[other[0]] + coeffs[1] * n[other[1]]``."""

    pivot: int
    k: int
    coeffs: tuple
    others: tuple


IDENTITY = (0, 1, 2)


@dataclass(frozen=True)
class MatrixExponents:
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int
    type_tag: MatrixType
    # canonical variable v is original variable relabeling[v]
    relabeling: tuple = IDENTITY

    def __post_init__(self):
        raw = self.raw
        if any(not isinstance(e, int) or e < 1 for e in raw):
            raise ValueError(f"exponents must be positive integers, got {raw}")
        if self.type_tag is not _condition(raw, refine=True):
            raise ValueError(f"{raw} does not satisfy the conditions of {self.type_tag.value}")
        if self.type_tag is MatrixType.TYPE1_PRIME:
            r = self.a2 // self.a1 + 1
            if self.a2 == (r - 1) * self.a1 and self.c1 <= (r - 1) * self.c2:
                raise ValueError(f"{raw}: I_2(M) is not prime (c1 <= (r-1) c2 with a2 = (r-1) a1)")

    @property
    def raw(self) -> tuple:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    @classmethod
    def from_raw(cls, raw, type_tag=None, relabeling=IDENTITY) -> "MatrixExponents":
        tag = type_tag or _condition(tuple(raw), refine=True)
        if tag is None:
            raise Unclassifiable(f"{tuple(raw)} satisfies neither type condition")
        return cls(*raw, type_tag=tag, relabeling=tuple(relabeling))


def _condition(raw, refine=False):
    a1, a2, b1, b2, c1, c2 = raw
    if a1 <= a2 and b1 >= b2 and c1 >= c2:
        if refine and b1 == b2 and a2 * c2 <= a1 * c1:
            return MatrixType.TYPE1_PRIME
        return MatrixType.TYPE1
    if a1 > a2 and b1 > b2 and c1 > c2:
        return MatrixType.TYPE2
    return None


def _representations(target: int, p: int, q: int):
    """All (u, v) >= 0 with u*p + v*q == target."""
    return [(u, (target - u * p) // q) for u in range(target // p + 1) if (target - u * p) % q == 0]


def minimal_relations(w: Weights) -> tuple:
    """The three minimal relations of the semigroup generated by ``w``.

    Raises CompleteIntersection when some minimal relation involves only two
    of the generators.
    """
    n = tuple(w.normalized())
    rels = []
    for i in range(3):
        others = tuple(j for j in range(3) if j != i)
        p, q = n[others[0]], n[others[1]]
        bound = p * q
        # representable[s] is True iff s lies in the semigroup <p, q>
        representable = [False] * (bound * n[i] + 1)
        representable[0] = True
        for s in range(1, len(representable)):
            representable[s] = (s >= p and representable[s - p]) or (s >= q and representable[s - q])
        for k in range(1, bound + 1):
            if representable[k * n[i]]:
                break
        else:
            raise SearchBoundExceeded(f"no relation for generator {n[i]} below {bound}")
        rels.append((i, k, others, _representations(k * n[i], p, q)))
    for i, k, _, reps in rels:
        if any(0 in r for r in reps):
            raise CompleteIntersection(f"{k}*{n[i]} is a multiple of a single generator")
    for i, k, _, reps in rels:
        if len(reps) > 1:
            raise InconsistentRelations(f"{k}*{n[i]} has several representations {reps}")
    return tuple(Relation(pivot=i, k=k, coeffs=reps[0], others=o) for i, k, o, reps in rels)


def exponents_from_relations(rels) -> tuple:
    """Read (a1, a2, b1, b2, c1, c2) off the three minimal relations."""
    by_pivot = {r.pivot: r for r in rels}
    if sorted(by_pivot) != [0, 1, 2]:
        raise InconsistentRelations("need exactly one relation per variable")

    def coeff(pivot, var):
        r = by_pivot[pivot]
        return r.coeffs[r.others.index(var)]

    # H = x^(a1+a2) - y^b1 z^c2, F = y^(b1+b2) - x^a2 z^c1, G = z^(c1+c2) - x^a1 y^b2
    a1, a2 = coeff(2, 0), coeff(1, 0)
    b1, b2 = coeff(0, 1), coeff(2, 1)
    c1, c2 = coeff(1, 2), coeff(0, 2)
    raw = (a1, a2, b1, b2, c1, c2)
    if (a1 + a2, b1 + b2, c1 + c2) != (by_pivot[0].k, by_pivot[1].k, by_pivot[2].k):
        raise InconsistentRelations(f"cross-readings {raw} disagree with relation degrees")
    if min(raw) < 1:
        raise InconsistentRelations(f"non-positive exponent in {raw}")
    return raw


def rotate(raw):
    """Rename x->y, y->z, z->x and restore the matrix pattern."""
    a1, a2, b1, b2, c1, c2 = raw
    return (c1, c2, a1, a2, b1, b2)


def swap(raw):
    """Exchange x and z (and the rows of the matrix)."""
    a1, a2, b1, b2, c1, c2 = raw
    return (c2, c1, b2, b1, a2, a1)


def _compose(outer, inner):
    # canonical v -> original inner[outer[v]]
    return tuple(inner[outer[v]] for v in range(3))


_ROTATE_PERM = (2, 0, 1)  # new x is old z, new y is old x, new z is old y
_SWAP_PERM = (2, 1, 0)


def relabelings(raw):
    """All six relabeled exponent tuples with their variable permutations."""
    out = []
    cur, perm = tuple(raw), IDENTITY
    for _ in range(3):
        out.append((cur, perm))
        out.append((swap(cur), _compose(_SWAP_PERM, perm)))
        cur, perm = rotate(cur), _compose(_ROTATE_PERM, perm)
    return out


_TIER = {MatrixType.TYPE1_PRIME: 0, MatrixType.TYPE1: 1, MatrixType.TYPE2: 2}


def classify(raw) -> MatrixExponents:
    """Bring raw exponents into canonical type 1', type 1 or type 2 form.

    Among all relabelings satisfying a type condition, the most refined type
    wins and ties go to the lexicographically largest tuple, so every
    relabeling of the same matrix classifies identically.
    """
    raw = tuple(raw)
    if len(raw) != 6 or any(not isinstance(e, int) or e < 1 for e in raw):
        raise ValueError(f"need six positive integers, got {raw}")
    candidates = []
    for cand, perm in relabelings(raw):
        tag = _condition(cand, refine=True)
        if tag is not None:
            candidates.append((_TIER[tag], tuple(-e for e in cand), cand, perm, tag))
    if not candidates:
        raise Unclassifiable(f"no relabeling of {raw} satisfies a type condition")
    _, _, cand, perm, tag = min(candidates)
    return MatrixExponents(*cand, type_tag=tag, relabeling=perm)


def r_index(e: MatrixExponents) -> int:
    """``floor(a2 / a1) + 1``."""
    if e.type_tag is not MatrixType.TYPE1_PRIME:
        raise WrongType(f"r is defined for type 1' matrices, not {e.type_tag.value}")
    return e.a2 // e.a1 + 1


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def weights_of(e) -> Weights | None:
    """Weights making F, G, H homogeneous and minimal, or None.

    Solves the weighted-degree identities for (n1, n2, n3).  The result is
    rejected (None) when the kernel has no positive vector or when F, G, H
    are not the minimal relations of the resulting semigroup, i.e. when the
    matrix does not come from a space monomial curve.
    """
    a1, a2, b1, b2, c1, c2 = e.raw if isinstance(e, MatrixExponents) else tuple(e)
    rows = ((a1 + a2, -b1, -c2), (-a2, b1 + b2, -c1), (-a1, -b2, c1 + c2))
    n = _cross(rows[0], rows[1])
    if all(v < 0 for v in n):
        n = tuple(-v for v in n)
    if any(v <= 0 for v in n):
        return None
    if any(sum(r[i] * n[i] for i in range(3)) for r in rows):
        return None
    w = Weights(*n).normalized()
    try:
        rels = minimal_relations(w)
    except CompleteIntersection:
        return None
    if tuple(r.k for r in rels) != (a1 + a2, b1 + b2, c1 + c2):
        return None
    return w


def canonical_weights(w: Weights, e: MatrixExponents) -> Weights:
    """Weights of the original curve re-ordered into ``e``'s variable labels."""
    n = tuple(w.normalized())
    return Weights(*(n[e.relabeling[v]] for v in range(3)))


def curve_exponents(w: Weights) -> MatrixExponents:
    """minimal_relations, exponents_from_relations and classify in one go."""
    return classify(exponents_from_relations(minimal_relations(w)))
