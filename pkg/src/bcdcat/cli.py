"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 a required
identity failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import catdata as cd
from .checks import run_checks
from .export import FORMATS, Result, export, render, spec_json
from .modularize import NotModularizableError, modular_table
from .partitions import Partition
from .series import (CLI_NAMES, ConsistencyError, InvalidParametersError, SeriesSpec,
                     level_rank_dual, make_spec, parse_series)

__all__ = ["main", "run", "build_parser", "EXIT_OK", "EXIT_USAGE", "EXIT_COMPUTE", "EXIT_CONSISTENCY"]

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_CONSISTENCY = 0, 1, 2, 3

log = logging.getLogger("bcdcat")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _genus_range(text: str) -> list[int]:
    """Parse ``3``, ``0..6`` or ``0,2,4``."""
    try:
        if ".." in text:
            a, b = text.split("..")
            out = list(range(int(a), int(b) + 1))
        else:
            out = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad genus range {text!r}") from None
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError("genus must be non-negative")
    return out


def _m_choice(text: str) -> tuple[Partition, int]:
    try:
        lam, m = text.rsplit("=", 1)
        return Partition.parse(lam), int(m)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected PARTITION=1 or PARTITION=4, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bcdcat", description="Exact data for the B/C/D-series categories at roots of unity.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, series_choices=None):
        p.add_argument("--series", required=True, choices=series_choices or list(CLI_NAMES),
                       help="series tag")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--output", help="write to this file instead of stdout")
        return p

    def m_options(p):
        p.add_argument("--m-choice", type=_m_choice, action="append", default=[], metavar="LAMBDA=M",
                       help="m in {1,4} for one diagram with stabilizer of order 4 (D series)")
        p.add_argument("--default-m", type=int, choices=(1, 4), help="m for all remaining such diagrams")

    common(sub.add_parser("labels", help="label sets Gamma and Gamma-bar"))
    p = common(sub.add_parser("dims", help="quantum dimensions and twists"))
    p.add_argument("--all", action="store_true", help="include Gamma-bar minus Gamma")
    common(sub.add_parser("twists", help="twist coefficients"))
    common(sub.add_parser("transparent", help="transparent simple objects"))
    common(sub.add_parser("verdict", help="modularizability verdict"))
    m_options(common(sub.add_parser("modularize", help="simple objects of the modularization")))
    common(sub.add_parser("smatrix", help="S-matrix (C series)"), ["C"])
    common(sub.add_parser("fusion", help="fusion rules (C series)"), ["C"])
    p = common(sub.add_parser("verlinde", help="genus-g Verlinde dimensions"), ["C", "CB", "BD", "D"])
    p.add_argument("--genus", type=_genus_range, default=[0, 1, 2, 3], help="e.g. 2, 0..6 or 0,2,4")
    p.add_argument("--method", choices=("closed", "generic", "both"), default="both")
    p.add_argument("--symbolic", action="store_true", help="D series: leave m symbolic")
    m_options(p)
    common(sub.add_parser("refine", help="spin and cohomological refinements (C series)"), ["C"])
    p = common(sub.add_parser("check", help="run every applicable identity"))
    p.add_argument("--gmax", type=int, default=3)
    p = common(sub.add_parser("dual", help="level-rank dual and label map"))
    p.add_argument("--genus", type=_genus_range, default=None, help="also compare Verlinde dimensions (C, D)")
    return parser


# ---------------------------------------------------------------------------
# command bodies
# ---------------------------------------------------------------------------


def _cmd_labels(spec: SeriesSpec, args) -> Result:
    L = spec.labels
    rows = [{"label": lam, "in_gamma": lam in L} for lam in L.gamma_bar]
    extra = {"extra": list(L.extra)} if L.extra else {}
    return Result("labels", spec_json(spec, with_labels=True), rows, extra=extra)


def _cmd_dims(spec: SeriesSpec, args) -> Result:
    labels = spec.labels.gamma_bar if args.all else spec.labels.gamma
    rows = []
    for lam in labels:
        rows.append({"label": lam, "qdim": cd.qdim_general(spec, lam), "twist": cd.twist(spec, lam)})
    return Result("dims", spec_json(spec), rows)


def _cmd_twists(spec: SeriesSpec, args) -> Result:
    return Result("twists", spec_json(spec), [{"label": lam, "twist": cd.twist(spec, lam)} for lam in spec.labels.gamma])


def _cmd_transparent(spec: SeriesSpec, args) -> Result:
    rows = [{"label": t, "qdim": cd.label_qdim(spec, t), "twist": cd.label_twist(spec, t)}
            for t in cd.transparent_objects(spec)]
    return Result("transparent", spec_json(spec), rows, extra={"group": cd.transparent_group_type(spec)})


def _cmd_verdict(spec: SeriesSpec, args) -> Result:
    v = cd.modularizability(spec)
    rows = [{"label": lab, "qdim": d, "twist": t} for lab, d, t in v.witnesses]
    return Result("verdict", spec_json(spec), rows, extra={"verdict": v.verdict})


def _m_args(args):
    return dict(args.m_choice), args.default_m


def _cmd_modularize(spec: SeriesSpec, args) -> Result:
    choices, default = _m_args(args)
    table = modular_table(spec, choices, default)
    rows = [{"kind": e.label.tag, "partition": e.label.partition, "qdim": e.qdim, "twist": e.twist}
            for e in table.labels]
    rows += [{"kind": "undetermined", "partition": lam, "qdim": None, "twist": cd.twist(spec, lam)}
             for lam in table.undetermined]
    return Result("modularize", spec_json(spec), rows, notes=table.notes)


def _cmd_smatrix(spec: SeriesSpec, args) -> Result:
    from .smatrix import build_smatrix

    sm = build_smatrix(spec)
    rows = [{"row": a, "col": b, "lambda": sm.labels[a], "mu": sm.labels[b], "S": sm.S[a][b]}
            for a in range(len(sm.labels)) for b in range(len(sm.labels))]
    return Result("smatrix", spec_json(spec), rows, extra={"labels": list(sm.labels), "omega": sm.omega})


def _cmd_fusion(spec: SeriesSpec, args) -> Result:
    from .smatrix import build_smatrix, fusion_from_S

    fus = fusion_from_S(build_smatrix(spec))
    rows = [{"lambda": a, "mu": b, "nu": c, "N": v} for a, b, c, v in fus.records()]
    return Result("fusion", spec_json(spec), rows)


def _cmd_verlinde(spec: SeriesSpec, args) -> Result:
    from . import verlinde as vl

    name = args.series
    rows = []
    notes = []
    choices, default = _m_args(args)
    if spec.series == "D" and (args.symbolic or (not choices and default is None)):
        notes.append("m left symbolic: d_g = A + sum over lambda of m_lambda^g * B_lambda")
        for g in args.genus:
            sym = vl.verlinde_D_symbolic(spec.n, spec.k, g)
            rows.append({"series": name, "n": spec.n, "k": spec.k, "g": g, "term": "A", "coefficient": sym.A})
            for lam, b in sym.B.items():
                rows.append({"series": name, "n": spec.n, "k": spec.k, "g": g, "term": str(lam), "coefficient": b})
        return Result("verlinde", spec_json(spec), rows, notes=notes)
    kw = {"m_choices": choices, "default_m": default} if spec.series == "D" else {}
    for g in args.genus:
        values = {}
        if args.method in ("closed", "both"):
            values["closed_form"] = vl.verlinde_closed(spec.series, spec.n, spec.k, g, **kw)
        if args.method in ("generic", "both"):
            values["generic"] = vl.verlinde_from_table(spec.series, spec.n, spec.k, g, **kw)
        if len(set(values.values())) > 1:
            raise ConsistencyError(f"closed form != generic Verlinde formula at {spec}, g = {g}: {values}")
        for method, v in values.items():
            rows.append({"series": name, "n": spec.n, "k": spec.k, "g": g, "d_g": v, "method": method})
    return Result("verlinde", spec_json(spec), rows, notes=notes)


def _cmd_refine(spec: SeriesSpec, args) -> Result:
    from .refine import graded_hopf_identity, refinement_verdict, unknot_eval

    verdict = refinement_verdict(spec)
    kn = spec.n * spec.k
    vanishing = {2: 0, 0: 1}.get(kn % 4)
    rows = []
    for nu in (0, 1):
        for eps in (1, -1):
            v = unknot_eval(spec, eps, nu)
            expect_zero = nu == vanishing
            rows.append({"name": f"<U_{eps:+d}(omega_{nu})>", "lhs": v,
                         "rhs": 0 if expect_zero else None, "pass": v.is_zero() if expect_zero else None})
        h = graded_hopf_identity(spec, nu)
        rows.append({"name": f"graded sliding, nu = {nu}", "lhs": h.lhs, "rhs": h.product, "pass": h.sliding_holds})
        rows.append({"name": f"Hopf identity, nu = {nu}", "lhs": h.lhs, "rhs": h.rhs, "pass": h.holds})
        if not (h.sliding_holds and h.holds):
            raise ConsistencyError(f"graded Hopf identity fails at {spec}, nu = {nu}")
    notes = []
    if kn % 2:
        notes.append("kn is odd: k^n lies in omega_1, so the Hopf identity has no k^n term")
    return Result("refine", spec_json(spec), rows, extra={"verdict": verdict, "checks": rows}, notes=notes)


def _cmd_check(spec: SeriesSpec, args) -> Result:
    results = run_checks(spec, gmax=args.gmax)
    rows = [{"name": r.name, "pass": r.passed, "detail": r.detail} for r in results]
    return Result("check", spec_json(spec), rows, extra={"passed": all(r.passed for r in results)})


def _cmd_dual(spec: SeriesSpec, args) -> Result:
    dual, relabel = level_rank_dual(spec)
    rows = []
    for lam in spec.labels.gamma:
        mu = relabel(lam)
        d1, d2 = cd.qdim_general(spec, lam), cd.qdim_general(dual, mu)
        rows.append({"label": lam, "dual_label": mu, "qdim": d1, "dual_qdim": d2, "equal": d1 == d2})
    extra = {"dual_series": dual.series, "dual_n": dual.n, "dual_k": dual.k, "dual_s": dual.s_value}
    if args.genus is not None and spec.series in ("C", "D"):
        from .verlinde import level_rank_check

        report = level_rank_check(spec.series, spec.n, spec.k, max(args.genus))
        extra["verlinde_equal"] = [r.equal for r in report if r.g in args.genus]
    return Result("dual", spec_json(spec), rows, extra=extra)


COMMANDS = {
    "labels": _cmd_labels,
    "dims": _cmd_dims,
    "twists": _cmd_twists,
    "transparent": _cmd_transparent,
    "verdict": _cmd_verdict,
    "modularize": _cmd_modularize,
    "smatrix": _cmd_smatrix,
    "fusion": _cmd_fusion,
    "verlinde": _cmd_verlinde,
    "refine": _cmd_refine,
    "check": _cmd_check,
    "dual": _cmd_dual,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command, write its output; return the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        spec = make_spec(parse_series(args.series), args.n, args.k)
    except InvalidParametersError as exc:
        print(f"bcdcat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    log.info("running %s on %s", args.command, spec)
    try:
        result = COMMANDS[args.command](spec, args)
    except ConsistencyError as exc:
        print(f"bcdcat: identity failed: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (NotModularizableError, ArithmeticError, ValueError) as exc:
        print(f"bcdcat: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    try:
        written = export(result, args.format, args.output)
    except OSError as exc:
        print(f"bcdcat: cannot write output: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if written is None:
        sys.stdout.write(render(result, args.format))
    else:
        log.info("wrote %s", written)
    if args.command == "check" and not result.extra["passed"]:
        for row in result.rows:
            if not row["pass"]:
                print(f"bcdcat: identity failed: {row['name']} at {spec}: {row['detail']}", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
