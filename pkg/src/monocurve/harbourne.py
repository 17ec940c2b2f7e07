"""Containments P^(2l-1) in m P^l: predictions and solver-checked verdicts."""

from __future__ import annotations

from dataclasses import dataclass

from .curvegen import MatrixExponents, MatrixType, WrongType, r_index, weights_of
from .gradedmembership import (
    ContainmentVerdict,
    IdealGens,
    MembershipCertificate,
    component_membership,
    contained,
    ideal_power,
    m_multiples,
)
from .polyring import QQ, FieldSpec, Weights
from .sympow import clearing_exponents, d_poly, delta, dual_identity_check, fgh, sympow_basis


class InternalMismatch(RuntimeError):
    """A theorem-level prediction disagrees with the solver."""


def third_power_criterion(e: MatrixExponents) -> bool:
    """Predicted answer to ``P^(3) <= m P^2`` (True means contained)."""
    if e.type_tag is MatrixType.TYPE2:
        return True
    alpha = max(0, 2 * e.a1 - e.a2)
    gamma = max(0, 2 * e.c2 - e.c1)
    return not (alpha == 0 and gamma == 0 and e.b1 == e.b2)


def stable_n(e: MatrixExponents) -> int:
    if e.type_tag is not MatrixType.TYPE1_PRIME:
        raise WrongType(f"n is defined for type 1' matrices, not {e.type_tag.value}")
    return (r_index(e) + 1) // 2 + 1


@dataclass(frozen=True)
class ProfileEntry:
    """Verdict for ``P^(2l-1)`` against ``m P^l``."""

    level: int
    symbolic_level: int
    predicted: bool
    verdict: ContainmentVerdict

    @property
    def contained(self) -> bool:
        return self.verdict.contained


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    level: int
    holds: bool
    certificate: MembershipCertificate | None = None


@dataclass(frozen=True)
class HarbourneReport:
    exponents: MatrixExponents
    weights: Weights
    field: FieldSpec
    r: int | None
    n: int | None
    third_power_predicted: bool
    third_power: ContainmentVerdict
    profile: tuple = ()
    lemma_checks: tuple = ()


def _base_ideal(e, field, w):
    return IdealGens(fgh(e, field), w, ("F", "G", "H"))


def third_power_verdict(e: MatrixExponents, field: FieldSpec = QQ, jobs: int = 1) -> ContainmentVerdict:
    w = weights_of(e)
    basis = sympow_basis(3, e, field)
    sym3 = IdealGens(basis.generators, w, basis.labels)
    target = m_multiples(ideal_power(_base_ideal(e, field, w), 2), 1)
    return contained(sym3, target, jobs=jobs)


def _profile(e, field, w, jobs):
    r, n = r_index(e), stable_n(e)
    P = _base_ideal(e, field, w)
    entries = []
    for ell in range(1, n + 1):
        target = m_multiples(ideal_power(P, ell), 1)
        level = 2 * ell - 1
        if ell < n:
            # 2l - 1 <= r here, so D_(2l-1) is a recursion output
            d = d_poly(level, e, field).value
            source = IdealGens((d,), w, (f"D_{level}",))
        else:
            expected = r + 2 if r % 2 else r + 1
            assert level == expected, (level, r)
            basis = sympow_basis(level, e, field)
            source = IdealGens(basis.generators, w, basis.labels)
        verdict = contained(source, target, jobs=jobs)
        entries.append(ProfileEntry(ell, level, ell == n, verdict))
    return tuple(entries)


def _member_check(name, level, f, ideal):
    res = component_membership(f, ideal)
    cert = res if isinstance(res, MembershipCertificate) else None
    return LemmaCheck(name, level, cert is not None, cert)


def lemma_checks(e: MatrixExponents, field: FieldSpec = QQ) -> tuple:
    """Dual identities, clearing memberships and the delta-membership lemma."""
    w = weights_of(e)
    r = r_index(e)
    P = _base_ideal(e, field, w)
    out = []
    for ell in range(0, r + 2):
        d = d_poly(ell, e, field).value
        half = ideal_power(P, (ell + 1) // 2)
        out.append(_member_check("delta", ell, d, m_multiples(half, delta(ell, e))))
        if ell == 0:
            continue
        out.append(LemmaCheck("dual", ell, dual_identity_check(ell, e, field)))
        power = ideal_power(P, ell)
        mx, mz = clearing_exponents(ell, e)
        out.append(_member_check("clear_x", ell, d.shift(mx), power))
        out.append(_member_check("clear_z", ell, d.shift(mz), power))
    return tuple(out)


def verify_harbourne_profile(
    e: MatrixExponents, field: FieldSpec = QQ, jobs: int = 1, lemmas: bool = True
) -> HarbourneReport:
    """Run every prediction through the solver and assemble the report.

    Type 1 matrices with b1 > b2 and type 2 matrices only get the third-power
    verdict.  Any disagreement between prediction and solver raises
    InternalMismatch.
    """
    w = weights_of(e)
    if w is None:
        raise ValueError(f"{e.raw} does not come from a space monomial curve")
    predicted = third_power_criterion(e)
    third = third_power_verdict(e, field, jobs)
    if third.contained != predicted:
        raise InternalMismatch(
            f"third power: predicted contained={predicted}, solver says {third.contained}"
        )
    if e.type_tag is not MatrixType.TYPE1_PRIME:
        return HarbourneReport(e, w, field, None, None, predicted, third)

    profile = _profile(e, field, w, jobs)
    for entry in profile:
        if entry.contained != entry.predicted:
            raise InternalMismatch(
                f"level {entry.symbolic_level} vs m P^{entry.level}: "
                f"predicted contained={entry.predicted}, solver says {entry.contained}"
            )
    checks = lemma_checks(e, field) if lemmas else ()
    failed = [c for c in checks if not c.holds]
    if failed:
        c = failed[0]
        raise InternalMismatch(f"lemma check {c.name} fails at level {c.level}")
    return HarbourneReport(e, w, field, r_index(e), stable_n(e), predicted, third, profile, checks)
