"""Command-line front end.

Exit codes: 0 success, 1 a containment query came out negative (``contain``
only), 2 usage error, 3 mathematical or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curvegen import (
    CompleteIntersection,
    MatrixType,
    Unclassifiable,
    classify,
    curve_exponents,
    r_index,
    weights_of,
)
from .gradedmembership import (
    CertificateError,
    IdealGens,
    MembershipCertificate,
    contained,
    ideal_power,
    ideal_product,
    m_multiples,
    unit_ideal,
)
from .harbourne import InternalMismatch, stable_n, verify_harbourne_profile
from .polyring import FieldSpec, NotDivisible, Weights
from .sympow import d_poly, fgh, sympow_basis


class UsageError(ValueError):
    pass


class NoMatrix(ValueError):
    """The input has no usable Herzog matrix."""


def _int_triple(text, count):
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got {text!r}")
    if len(vals) != count or min(vals) < 1:
        raise argparse.ArgumentTypeError(f"expected {count} positive integers, got {text!r}")
    return vals


def _field(text):
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--curve", type=lambda t: _int_triple(t, 3), help="semigroup generators n1,n2,n3")
    src.add_argument("--matrix", type=lambda t: _int_triple(t, 6), help="exponents a1,a2,b1,b2,c1,c2")
    common.add_argument("--field", type=_field, default=FieldSpec(), help="q (default) or fp:<prime>")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for containment checks")

    parser = argparse.ArgumentParser(prog="monocurve", description="Symbolic powers of space monomial curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="classification, exponents, weights, r and n")
    p = sub.add_parser("dpoly", parents=[common], help="print D_L")
    p.add_argument("--l", type=int, required=True, dest="level")
    p = sub.add_parser("sympower", parents=[common], help="generators of the L-th symbolic power")
    p.add_argument("--l", type=int, required=True, dest="level")
    p = sub.add_parser("contain", parents=[common], help="decide A <= B; exit 1 when not contained")
    p.add_argument("--a", required=True, help="ideal spec, e.g. sym:3")
    p.add_argument("--b", required=True, help="ideal spec, e.g. m*pow:2")
    p = sub.add_parser("harbourne", parents=[common], help="third-power verdict and containment profile")
    p.add_argument("--no-lemmas", action="store_true", help="skip the per-level lemma checks")
    return parser


# -- input --------------------------------------------------------------------


def _resolve(args):
    """(exponents or None, weights or None, status string)."""
    if args.curve:
        try:
            e = curve_exponents(Weights(*args.curve))
        except CompleteIntersection:
            return None, Weights(*args.curve).normalized(), "complete_intersection"
    else:
        try:
            e = classify(args.matrix)
        except Unclassifiable:
            return None, None, "unclassifiable"
    return e, weights_of(e), "ok"


def _input_echo(args):
    if args.curve:
        return {"curve": list(args.curve)}
    return {"matrix": list(args.matrix)}


def _require(e, w, status):
    if e is None:
        raise NoMatrix(f"input is {status.replace('_', ' ')}; no Herzog matrix to work with")
    if w is None:
        raise NoMatrix("matrix does not come from a space monomial curve (no admissible weights)")


def _classification(e, w, status):
    if e is None:
        return {"status": status, "type": None, "exponents": None, "weights": list(w) if w else None,
                "relabeling": None, "primality": None}
    return {
        "status": status,
        "type": e.type_tag.value,
        "exponents": list(e.raw),
        "weights": list(w) if w else None,
        "relabeling": list(e.relabeling),
        "primality": "per Herzog correspondence" if w else "no admissible weights",
    }


def _r_n(e):
    if e is not None and e.type_tag is MatrixType.TYPE1_PRIME:
        return r_index(e), stable_n(e)
    return None, None


# -- ideal specs --------------------------------------------------------------


def parse_ideal_spec(spec: str, e, w, field) -> IdealGens:
    """``*``-separated factors: ``sym:L``, ``pow:L``, ``P``, ``m`` or ``m^k``."""
    P = IdealGens(fgh(e, field), w, ("F", "G", "H"))
    out = unit_ideal(w, field)
    m_power = 0
    for tok in (t.strip() for t in spec.split("*")):
        if tok == "P":
            out = ideal_product(out, P)
        elif tok == "m" or tok.startswith("m^"):
            m_power += 1 if tok == "m" else _nonneg(tok[2:], spec)
        elif tok.startswith("sym:"):
            b = sympow_basis(_nonneg(tok[4:], spec), e, field)
            out = ideal_product(out, IdealGens(b.generators, w, b.labels))
        elif tok.startswith("pow:"):
            out = ideal_product(out, ideal_power(P, _nonneg(tok[4:], spec)))
        else:
            raise UsageError(f"bad factor {tok!r} in ideal spec {spec!r}")
    return m_multiples(out, m_power)


def _nonneg(text, spec):
    if not text.isdigit():
        raise UsageError(f"bad exponent {text!r} in ideal spec {spec!r}")
    return int(text)


# -- serialization ------------------------------------------------------------


def _cert_json(target_label, cert: MembershipCertificate):
    return {"target": target_label, "cofactors": {lab: str(h) for lab, h in cert.nonzero_terms()}}


def _verdict_json(name, verdict):
    out = {"query": name, "contained": verdict.contained}
    if not verdict.contained:
        out["witness"] = verdict.witness_label
        out["witness_polynomial"] = str(verdict.witness)
        out["witness_degree"] = verdict.witness_degree
    return out


def _verdict_text(verdict):
    if verdict.contained:
        return "CONTAINED"
    return f"NOT CONTAINED; witness: {verdict.witness_label}"


def _report(args, e, w, status, **extra):
    r, n = _r_n(e)
    out = {
        "input": _input_echo(args),
        "field": str(args.field),
        "classification": _classification(e, w, status),
        "type": e.type_tag.value if e else None,
        "exponents": list(e.raw) if e else None,
        "r": r,
        "n": n,
        "verdicts": [],
        "certificates": [],
    }
    out.update(extra)
    return out


# -- subcommands --------------------------------------------------------------


def cmd_analyze(args, e, w, status):
    rep = _report(args, e, w, status)
    lines = [f"status: {status}"]
    if e is not None:
        lines += [
            f"type: {e.type_tag.value}",
            "exponents: " + ",".join(map(str, e.raw)),
            "relabeling: " + ",".join(map(str, e.relabeling)),
        ]
    lines.append("weights: " + (",".join(map(str, w)) if w else "none"))
    if rep["r"] is not None:
        lines += [f"r: {rep['r']}", f"n: {rep['n']}"]
    return 0, rep, lines


def cmd_dpoly(args, e, w, status):
    _require(e, w, status)
    d = d_poly(args.level, e, args.field).value
    rep = _report(args, e, w, status, result=str(d), level=args.level)
    return 0, rep, [str(d)]


def cmd_sympower(args, e, w, status):
    _require(e, w, status)
    b = sympow_basis(args.level, e, args.field)
    gens = [{"label": lab, "polynomial": str(g)} for g, lab in zip(b.generators, b.labels)]
    rep = _report(args, e, w, status, level=args.level, provenance=b.provenance.value, result=gens)
    lines = [f"provenance: {b.provenance.value}"] + [f"{g['label']}: {g['polynomial']}" for g in gens]
    return 0, rep, lines


def cmd_contain(args, e, w, status):
    _require(e, w, status)
    a = parse_ideal_spec(args.a, e, w, args.field)
    b = parse_ideal_spec(args.b, e, w, args.field)
    verdict = contained(a, b, jobs=args.jobs)
    certs = [_cert_json(lab, c) for lab, c in zip(a.labels, verdict.certificates)]
    rep = _report(
        args, e, w, status,
        result="CONTAINED" if verdict.contained else "NOT CONTAINED",
        verdicts=[_verdict_json(f"{args.a} <= {args.b}", verdict)],
        certificates=certs,
    )
    return (0 if verdict.contained else 1), rep, [_verdict_text(verdict)]


def cmd_harbourne(args, e, w, status):
    _require(e, w, status)
    hr = verify_harbourne_profile(e, args.field, jobs=args.jobs, lemmas=not args.no_lemmas)
    verdicts = [_verdict_json("sym:3 <= m*pow:2", hr.third_power)]
    certs = []
    lines = [
        f"type: {e.type_tag.value}",
        "exponents: " + ",".join(map(str, e.raw)),
        f"third power: {_verdict_text(hr.third_power)}",
    ]
    if hr.r is not None:
        lines[2:2] = [f"r: {hr.r}", f"n: {hr.n}"]
    for entry in hr.profile:
        query = f"sym:{entry.symbolic_level} <= m*pow:{entry.level}"
        verdicts.append(_verdict_json(query, entry.verdict))
        labels = sympow_basis(entry.symbolic_level, e, args.field).labels if entry.contained else ()
        certs += [dict(_cert_json(lab, c), query=query) for lab, c in zip(labels, entry.verdict.certificates)]
        lines.append(f"P^({entry.symbolic_level}) in m*P^{entry.level}: {_verdict_text(entry.verdict)}")
    lemmas = [{"lemma": c.name, "level": c.level, "holds": c.holds} for c in hr.lemma_checks]
    if lemmas:
        lines.append(f"lemma checks: {sum(c['holds'] for c in lemmas)}/{len(lemmas)} hold")
    rep = _report(args, e, w, status, verdicts=verdicts, certificates=certs, lemma_checks=lemmas,
                  result="profile verified" if hr.profile else "third power verified")
    return 0, rep, lines


COMMANDS = {
    "analyze": cmd_analyze,
    "dpoly": cmd_dpoly,
    "sympower": cmd_sympower,
    "contain": cmd_contain,
    "harbourne": cmd_harbourne,
}

MATH_ERRORS = (NotDivisible, InternalMismatch, CertificateError, ArithmeticError, ValueError)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("monocurve: --jobs must be positive", file=stderr)
        return 2
    try:
        e, w, status = _resolve(args)
        code, rep, lines = COMMANDS[args.command](args, e, w, status)
    except UsageError as exc:
        print(f"monocurve: {exc}", file=stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"monocurve: {type(exc).__name__}: {exc}", file=stderr)
        return 3
    if args.format == "json":
        stdout.write(json.dumps(rep, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
