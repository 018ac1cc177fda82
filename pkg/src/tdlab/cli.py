"""Command-line front end: verify documents, list symmetry relatives,
generate examples, and print the relation-space dimension table.

Exit codes: 0 every check passed, 1 a check failed or the pair was
rejected, 2 the input could not be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import (
    DocumentError,
    PairDocument,
    RejectedNotTD,
    gen_krawtchouk,
    gen_split_form,
    load,
    save,
)
from .exactla import FieldSpec
from .polybasis import (
    check_basis_replacement_exhaustive,
    check_idempotent_expansions,
    check_tau_filtration,
)
from .report import CertReport, CheckResult
from .tdcore import (
    AxiomVerdict,
    D4Element,
    build_system,
    check_super_tridiagonal,
    d4_relative,
    idempotent_algebra_check,
    orderings_check,
    probe_corner_generation,
    relators_check,
    verify_tridiagonal_pair,
)
from .tensorspace import (
    certify_main_theorem,
    check_complements,
    check_corner_middle_reduction,
    check_dimension_laws,
    check_kernel,
    check_shift_triangularity,
    check_transpose_properties,
)


def _parse_field(text: str) -> FieldSpec:
    if text == "rational":
        return FieldSpec.rational()
    if text.startswith("prime:"):
        tail = text[len("prime:"):]
        try:
            p = int(tail)
        except ValueError:
            raise ValueError(f"bad prime modulus in {text!r}") from None
        return FieldSpec.prime(p)
    raise ValueError(f"unknown field {text!r}; use 'rational' or 'prime:P'")


def _parse_scalars(field: FieldSpec, text: str) -> list:
    return [field.parse(token.strip()) for token in text.split(",")]


def _load_document(path: str) -> PairDocument:
    with open(path, "rb") as handle:
        return load(handle.read())


def _format_values(system_field: FieldSpec, values) -> str:
    return "(" + ",".join(str(system_field.format(v)) for v in values) + ")"


def _axiom_result(verdict: AxiomVerdict) -> CheckResult:
    if verdict.accepted:
        details = {"diameter": verdict.diameter, "shape": list(verdict.shape)}
    else:
        details = {"failures": [
            {"axiom": f.axiom.name, "witness": f.witness} for f in verdict.failures
        ]}
    return CheckResult("axioms", verdict.accepted, details)


def _verify_report(doc: PairDocument, checks: str) -> CertReport:
    report = CertReport(doc.label)
    verdict = verify_tridiagonal_pair(doc.A, doc.Astar)
    report.add(_axiom_result(verdict))
    if not verdict.accepted:
        return report
    system = build_system(doc.A, doc.Astar)
    report.add(idempotent_algebra_check(system))
    report.add(orderings_check(system))
    report.add(check_super_tridiagonal(system))
    report.add(relators_check(system))
    if checks == "all":
        report.add(check_idempotent_expansions(system))
        report.add(check_tau_filtration(system))
        report.add(check_basis_replacement_exhaustive(system))
        report.extend(check_dimension_laws(system))
        report.add(check_kernel(system))
        report.extend(check_transpose_properties(system))
        report.extend(check_complements(system))
        per_t = [{"t": t, "ok": check_shift_triangularity(system, t)}
                 for t in range(system.d + 1)]
        report.add(CheckResult(
            "triangular.shift_vs_diagonal",
            all(row["ok"] for row in per_t),
            {"per_t": per_t},
        ))
        report.add(CheckResult(
            "reduction.corner_middle",
            check_corner_middle_reduction(system),
            {"degrees": system.d + 1},
        ))
        cert = certify_main_theorem(system)
        report.add(CheckResult(
            "main.span_equality",
            cert.equal,
            {"dim_mixed_span": cert.dim_mixed_span,
             "dim_corner_span": cert.dim_corner_span},
        ))
        report.add(CheckResult(
            "main.commutators",
            cert.commutator_max_rank == 0,
            {"commutator_max_rank": cert.commutator_max_rank},
        ))
        probe = probe_corner_generation(system)
        report.add(CheckResult(
            "probe.corner_generation",
            probe.generated,
            {"wordspan_dim": probe.wordspan_dim,
             "corner_dim": probe.corner_dim,
             "generated_dim": probe.generated_dim},
        ))
    return report


def _emit_report(report: CertReport, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2, default=str) + "\n")
        return
    width = max(len(v.check) for v in report.verdicts)
    sys.stdout.write(f"label: {report.label}\n")
    for v in report.verdicts:
        sys.stdout.write(f"{v.check:<{width}}  {v.status}\n")
        if not v.passed:
            detail = json.dumps(v.details, default=str, sort_keys=True)
            sys.stdout.write(f"  {detail}\n")
    sys.stdout.write(f"summary: {'pass' if report.summary else 'fail'}\n")


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = _load_document(args.path)
    report = _verify_report(doc, args.checks)
    _emit_report(report, args.fmt)
    return 0 if report.summary else 1


def _cmd_orbit(args: argparse.Namespace) -> int:
    doc = _load_document(args.path)
    verdict = verify_tridiagonal_pair(doc.A, doc.Astar)
    if not verdict.accepted:
        _emit_report_rejection(doc, verdict)
        return 1
    system = build_system(doc.A, doc.Astar)
    rows = []
    all_ok = True
    for g in D4Element.all_elements():
        relative = d4_relative(system, g)
        rv = verify_tridiagonal_pair(relative.A, relative.Astar)
        all_ok = all_ok and rv.accepted
        rows.append((
            g.display,
            _format_values(relative.field, relative.theta),
            _format_values(relative.field, relative.thetastar),
            "accepted" if rv.accepted else "rejected",
        ))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    sys.stdout.write(f"label: {doc.label}\n")
    for r in rows:
        cells = "  ".join(r[k].ljust(widths[k]) for k in range(4))
        sys.stdout.write(cells.rstrip() + "\n")
    return 0 if all_ok else 1


def _emit_report_rejection(doc: PairDocument, verdict: AxiomVerdict) -> None:
    sys.stdout.write(f"label: {doc.label}\n")
    for f in verdict.failures:
        sys.stdout.write(f"rejected: {f.axiom.name}: {f.witness}\n")


def _cmd_generate(args: argparse.Namespace) -> int:
    field = _parse_field(args.field)
    if args.family == "krawtchouk":
        if args.d is None:
            raise ValueError("krawtchouk requires --d")
        doc = gen_krawtchouk(args.d, field)
    else:
        for flag, value in (("--theta", args.theta),
                            ("--thetastar", args.thetastar),
                            ("--phi", args.phi)):
            if value is None:
                raise ValueError(f"split requires {flag}")
        result = gen_split_form(
            _parse_scalars(field, args.theta),
            _parse_scalars(field, args.thetastar),
            _parse_scalars(field, args.phi) if args.phi.strip() else [],
            field,
        )
        if isinstance(result, RejectedNotTD):
            sys.stdout.write("rejected: not a tridiagonal pair\n")
            for f in result.verdict.failures:
                sys.stdout.write(f"  {f.axiom.name}: {f.witness}\n")
            return 1
        doc = result
    data = save(doc)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(data)
        sys.stdout.write(f"wrote {args.out}\n")
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _cmd_dims(args: argparse.Namespace) -> int:
    doc = _load_document(args.path)
    verdict = verify_tridiagonal_pair(doc.A, doc.Astar)
    if not verdict.accepted:
        _emit_report_rejection(doc, verdict)
        return 1
    system = build_system(doc.A, doc.Astar)
    slices, total, grading = check_dimension_laws(system)
    sys.stdout.write(f"label: {doc.label}\n")
    sys.stdout.write(f"{'t':>3}  {'dim':>5}  {'expected':>8}\n")
    for row in slices.details["per_t"]:
        sys.stdout.write(f"{row['t']:>3}  {row['dim']:>5}  {row['expected']:>8}\n")
    d = total.details
    sys.stdout.write(f"total: {d['dim']} expected {d['expected']}\n")
    sys.stdout.write(f"codim: {d['codim']} expected {d['expected_codim']}\n")
    ok = slices.passed and total.passed and grading.passed
    sys.stdout.write(f"summary: {'pass' if ok else 'fail'}\n")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdlab",
        description="Exact certification of tridiagonal pairs and systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run certification checks on a document")
    verify.add_argument("path", help="pair document (JSON)")
    verify.add_argument("--checks", choices=("axioms", "all"), default="axioms",
                        help="axioms: structural checks only; all: every certificate")
    verify.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text", help="report format")
    verify.set_defaults(handler=_cmd_verify)

    orbit = sub.add_parser("orbit", help="list the eight symmetry relatives")
    orbit.add_argument("path", help="pair document (JSON)")
    orbit.set_defaults(handler=_cmd_orbit)

    generate = sub.add_parser("generate", help="generate a verified example")
    generate.add_argument("family", choices=("krawtchouk", "split"))
    generate.add_argument("--d", type=int, default=None, help="diameter (krawtchouk)")
    generate.add_argument("--field", default="rational",
                          help="'rational' or 'prime:P'")
    generate.add_argument("--theta", default=None,
                          help="comma separated eigenvalues (split)")
    generate.add_argument("--thetastar", default=None,
                          help="comma separated dual eigenvalues (split)")
    generate.add_argument("--phi", default=None,
                          help="comma separated superdiagonal entries (split)")
    generate.add_argument("-o", "--out", default=None, help="output path")
    generate.set_defaults(handler=_cmd_generate)

    dims = sub.add_parser("dims", help="print the relation-space dimension table")
    dims.add_argument("path", help="pair document (JSON)")
    dims.set_defaults(handler=_cmd_dims)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
