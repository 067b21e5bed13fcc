"""Command-line interface.

Subcommands: classify, phi, psi, roundtrip, motivic, selftest.  Payloads are
JSON (inline positional or ``--input`` file); inline arguments also accept
bare symbolic entries such as ``[[x,z],[w,y]]`` or ``xy - 2zw``.  Outputs are
deterministic byte streams suitable for golden-file testing.

Exit codes: 0 success, 2 parse error, 3 stability precondition, 4 geometric
validation, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serde
from .errors import (
    InputFormatError,
    NotStable,
    PairValidationError,
    ReguliError,
)
from .exact import format_bidegree, format_binary
from .fmbridge import SpecialPoint, canonical_special_module, transport_to_p3
from .grconic import conic_diagnostics, parameter_of_line, phi, swept_quadric
from .kronecker import (
    classify_stratum,
    dependency_form,
    det_quadric,
    end_algebra_dim,
)
from .motivic import pipeline_m2
from .quadgeom import resolution_from_pair, segre_quadric
from .selftest import run_selftest

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_STABLE = 3
EXIT_GEOMETRY = 4
EXIT_INTERNAL = 5


def _emit(payload, args, pretty_text: str | None = None) -> None:
    if getattr(args, "pretty", False) and pretty_text is not None:
        text = pretty_text if pretty_text.endswith("\n") else pretty_text + "\n"
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_payload(args, positional_names):
    """Inline positionals, or a JSON object from --input."""
    if args.input:
        with open(args.input) as fh:
            data = serde.loads(fh.read())
        if len(positional_names) == 1:
            return (data,)
        if isinstance(data, dict):
            try:
                return tuple(data[name] for name in positional_names)
            except KeyError as exc:
                raise InputFormatError(f"missing key {exc} in --input file")
        if isinstance(data, list) and len(data) == len(positional_names):
            return tuple(data)
        raise InputFormatError(
            f"--input file must hold an object with keys {positional_names}"
        )
    values = [getattr(args, name) for name in positional_names]
    if any(v is None for v in values):
        raise InputFormatError(
            f"expected inline arguments {positional_names} or --input FILE"
        )
    return tuple(serde.parse_inline(v) for v in values)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    (payload,) = _load_payload(args, ("module",))
    m = serde.decode_module(payload)
    stratum = classify_stratum(m)
    dep = dependency_form(m)
    report = {
        "stratum": str(stratum),
        "dependency_form": serde.encode_binary_form(dep),
        "end_dim": end_algebra_dim(m),
        "det_gram_rank": det_quadric(m).gram_rank(),
    }
    pretty = (
        f"stratum        {stratum}\n"
        f"dependency     {format_binary(dep, ('a1', 'a2'))}\n"
        f"end dimension  {report['end_dim']}\n"
        f"det Gram rank  {report['det_gram_rank']}"
    )
    _emit(report, args, pretty)
    return EXIT_OK


def cmd_phi(args) -> int:
    (payload,) = _load_payload(args, ("module",))
    m = serde.decode_module(payload)
    conic = phi(m)
    diag = conic_diagnostics(conic)
    report = {
        "conic": serde.encode_conic(conic),
        "diagnostics": {
            "plucker_ok": diag.plucker_ok,
            "basepoint_gcd": serde.encode_binary_form(diag.basepoint_gcd),
            "degree": diag.degree,
        },
    }
    names = ("p12", "p13", "p14", "p23", "p24", "p34")
    pretty = "\n".join(
        f"{n} = {format_binary(f)}" for n, f in zip(names, conic.forms)
    ) + f"\nplucker identity: {'ok' if diag.plucker_ok else 'VIOLATED'}" \
        f"\nbasepoint gcd: {format_binary(diag.basepoint_gcd)} (degree {diag.degree} map)"
    _emit(report, args, pretty)
    return EXIT_OK


def _psi_report(quadric, line):
    resolution = resolution_from_pair(quadric, line)
    report = serde.encode_resolution(resolution)
    if resolution.kind == 1:
        report["det_equals_minus_b"] = resolution.det() == -segre_quadric(quadric)
        report["det"] = serde.encode_bidegree_form(resolution.det())
    else:
        report["family"] = "SecondFactor" if resolution.kind == 2 else "FirstFactor"
        report["contracts_to"] = "D10" if resolution.kind == 2 else "D01"
    return resolution, report


def cmd_psi(args) -> int:
    quadric_payload, line_payload = _load_payload(args, ("quadric", "line"))
    quadric = serde.decode_quadric(quadric_payload)
    line = serde.decode_line(line_payload)
    resolution, report = _psi_report(quadric, line)
    if resolution.kind == 1:
        rows = [
            "  ".join(format_bidegree(e) for e in row) for row in resolution.matrix
        ]
        pretty = (
            "type 1 resolution matrix:\n  [" + rows[0] + "]\n  [" + rows[1] + "]\n"
            f"det = {format_bidegree(resolution.det())} "
            f"({'= -b, ok' if report['det_equals_minus_b'] else 'DET CHECK FAILED'})"
        )
    else:
        pretty = (
            f"type {resolution.kind} (ruling line, {report['family']}); "
            f"b = {format_bidegree(resolution.b)}; contracts to {report['contracts_to']}"
        )
    _emit(report, args, pretty)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    quadric_payload, line_payload = _load_payload(args, ("quadric", "line"))
    quadric = serde.decode_quadric(quadric_payload)
    line = serde.decode_line(line_payload)

    stages = []
    failed = False

    def stage(name, ok, **detail):
        nonlocal failed
        entry = {"stage": name, "status": "PASS" if ok else "FAIL"}
        entry.update(detail)
        stages.append(entry)
        failed = failed or not ok

    resolution, psi_rep = _psi_report(quadric, line)
    if resolution.kind == 1:
        stage("psi", psi_rep["det_equals_minus_b"], type=1)
        module = transport_to_p3(resolution)
        stage("transport", True, module=serde.encode_module(module))
        stratum = classify_stratum(module)
        stage("classify", str(stratum) == "STABLE", stratum=str(stratum))
        swept = swept_quadric(module)
        stage(
            "phi_sweep",
            swept.proportional_to(quadric),
            swept_quadric=serde.encode_quadric(swept),
        )
        parameter = parameter_of_line(module, line)
        stage(
            "parameter_of_line",
            parameter is not None,
            parameter=None
            if parameter is None
            else [serde.encode_rational(parameter[0]), serde.encode_rational(parameter[1])],
        )
    else:
        stage("psi", True, type=resolution.kind, family=psi_rep["family"])
        which = SpecialPoint.D10 if resolution.kind == 2 else SpecialPoint.D01
        module = canonical_special_module(which)
        stage(
            "contraction",
            True,
            special_point=str(which),
            module=serde.encode_module(module),
        )
        stratum = classify_stratum(module)
        stage("classify", str(stratum) == "STABLE", stratum=str(stratum))
        swept = swept_quadric(module)
        stage(
            "phi_sweep",
            serde.encode_quadric(swept) == [0, 1, 0, 0, 0, 0, 0, 0, -1, 0],
            swept_quadric=serde.encode_quadric(swept),
        )

    report = {"stages": stages, "status": "FAIL" if failed else "PASS"}
    pretty = "\n".join(
        f"{s['stage']:<18} {s['status']}" for s in stages
    ) + f"\noverall: {report['status']}"
    _emit(report, args, pretty)
    return EXIT_INTERNAL if failed else EXIT_OK


def cmd_motivic(args) -> int:
    table = pipeline_m2()
    from .motivic import euler

    report = {
        "table": {name: [int(c) for c in poly.coeffs] for name, poly in table.items()},
        "euler": {name: euler(poly) for name, poly in table.items()},
    }
    from .report import format_text_table

    pretty = format_text_table(table)
    if args.csv:
        from .report import write_csv

        write_csv(table, args.csv)
    if args.plot:
        from .report import render_figure

        render_figure(table, args.plot)
    _emit(report, args, pretty)
    return EXIT_OK


def cmd_selftest(args) -> int:
    report = run_selftest(args.seed, args.trials)
    _emit(report, args)
    return EXIT_OK if report["status"] == "PASS" else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reguli",
        description="exact computations on Kronecker modules, quadric/ruling "
        "pairs and conics in Gr(2,4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, positionals):
        for name in positionals:
            p.add_argument(name, nargs="?", help=f"inline JSON for the {name}")
        p.add_argument("--input", help="read the payload from a JSON file")
        p.add_argument("--output", help="write the report to a file")
        p.add_argument("--pretty", action="store_true", help="human-readable output")

    p = sub.add_parser("classify", help="GIT stratum of a Kronecker module")
    common(p, ("module",))
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("phi", help="parametrized conic in Gr(2,4) of a stable module")
    common(p, ("module",))
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("psi", help="resolution matrix of a (quadric, line) pair")
    common(p, ("quadric", "line"))
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser(
        "roundtrip", help="psi, transport, classification and conic sweep, end to end"
    )
    common(p, ("quadric", "line"))
    p.set_defaults(fn=cmd_roundtrip)

    p = sub.add_parser("motivic", help="virtual Poincare polynomial pipeline")
    p.add_argument("--output", help="write the report to a file")
    p.add_argument("--pretty", action="store_true", help="plain-text table")
    p.add_argument("--csv", help="also write the table as CSV")
    p.add_argument("--plot", help="also render the coefficient profile figure")
    p.set_defaults(fn=cmd_motivic)

    p = sub.add_parser("selftest", help="seeded property suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--output", help="write the report to a file")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotStable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_STABLE
    except PairValidationError as exc:
        print(f"error: {exc.fault}", file=sys.stderr)
        return EXIT_GEOMETRY
    except ReguliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
