"""Command-line front end: ``mgbar <subcommand> ...``.

JSON goes to stdout unless ``--out`` is given; ``--tsv`` switches tables to
tab-separated text.  Exit status is 0 on success, 1 on domain errors and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import curve_graphs as cg
from .divisor_algebra import DivisorClass, Model, log_canonical_divisor
from .fcurves import Inapplicable, Nef, enumerate_fcurves, gkm_nef_check, table_to_json, table_to_tsv
from .linear_series import (
    RegimeError,
    TailConfiguration,
    decomposition_identity,
    dimension_profile,
    vanishing_sequence_head,
)
from .oracle import run_oracles
from .phase_analysis import contracted_loci_description, critical_alphas, discrepancy_coefficient
from .rationals import format_q, parse_q
from .stack_descent import RamifiedBoundary, coarse_coefficient, sweep

REPORT_ALPHAS = ("1", "9/11", "4/5", "3/4", "7/10")


class DomainError(Exception):
    pass


def _model(text: str) -> Model:
    try:
        model = Model.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return model


def _rational(text: str) -> Fraction:
    try:
        return parse_q(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tsv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, delimiter="\t", lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ------------------------------------------------------------------


def cmd_nef_check(args) -> str:
    if args.class_file:
        with open(args.class_file) as fh:
            D = DivisorClass.from_json(fh.read())
    else:
        if args.genus is None or args.alpha is None:
            raise DomainError("nef-check needs --genus and --alpha, or --class FILE")
        D = log_canonical_divisor(args.genus, args.alpha, args.model)
    verdict = gkm_nef_check(D)
    if isinstance(verdict, Nef):
        if args.tsv:
            return table_to_tsv(verdict.certificate)
        out = {"verdict": "nef", "certificate": json.loads(table_to_json(verdict.certificate))}
    elif isinstance(verdict, Inapplicable):
        out = {"verdict": "inapplicable", "reason": verdict.reason, "index": verdict.index}
    else:
        out = {"verdict": "not-nef", "witness": str(verdict.witness), "value": format_q(verdict.value)}
    out["class"] = D.to_dict()
    return _dump(out)


def cmd_phases(args) -> str:
    report = critical_alphas(args.genus, args.model)
    if not args.tsv:
        return report.to_json() + "\n"
    samples = sorted({Fraction(0), Fraction(1), *report.critical_alphas})
    mids = [(x + y) / 2 for x, y in zip(samples, samples[1:])]
    alphas = sorted(set(samples) | set(mids))
    rows = [["stratum", *map(format_q, alphas)]]
    for F, signs in report.sign_table(alphas):
        rows.append([str(F), *("+" if s > 0 else "0" if s == 0 else "-" for s in signs)])
    return _tsv(rows)


def cmd_fcurves(args) -> str:
    if args.alpha is None:
        curves = enumerate_fcurves(args.genus)
        if args.tsv:
            return _tsv([["family", "params"]] + [[F.family, ",".join(map(str, F.params))] for F in curves])
        return _dump([F.to_dict() for F in curves])
    from .fcurves import intersection_table

    rows = intersection_table(log_canonical_divisor(args.genus, args.alpha, args.model))
    return table_to_tsv(rows) if args.tsv else table_to_json(rows) + "\n"


def cmd_vnprofile(args) -> str:
    cfg = TailConfiguration(args.g, args.r)
    prof = dimension_profile(cfg, args.n)
    out = prof.to_dict()
    out.update({"g": cfg.g, "r": cfg.r, "gD": cfg.gD})
    try:
        out["decomposition_identity"] = decomposition_identity(cfg.g, cfg.r, args.n)
        out["vanishing_head"] = list(vanishing_sequence_head(cfg, args.n))
    except RegimeError as exc:
        out["regime_error"] = str(exc)
    if args.tsv:
        return _tsv([["a", "dim", "in_regime"]] + [
            [a, "" if d is None else d, int(ok)] for a, (d, ok) in enumerate(zip(prof.dims, prof.in_regime))
        ])
    return _dump(out)


def _load_graph(path: str) -> cg.CurveGraph:
    with open(path) as fh:
        return cg.CurveGraph.from_json(fh.read())


def cmd_graph(args) -> str:
    G = _load_graph(args.file)
    if args.action == "check":
        stable, pseudo = cg.is_stable(G), cg.is_pseudostable(G)
        out = {
            "arithmetic_genus": cg.arithmetic_genus(G),
            "stable": stable.ok,
            "stable_reasons": list(stable.reasons),
            "pseudostable": pseudo.ok,
            "pseudostable_reasons": list(pseudo.reasons),
        }
        if out["arithmetic_genus"] >= 3:
            out["elliptic_tails"] = [sorted(t.vertex_subset) for t in cg.find_elliptic_tails(G)]
        return _dump(out)
    if args.action == "transform":
        return _dump(cg.t_transform(G).to_dict())
    if args.other is None:
        raise DomainError("graph equiv needs two files")
    return _dump({"t_equivalent": cg.t_equivalent(G, _load_graph(args.other))})


def cmd_descent(args) -> str:
    if args.action == "coeff":
        if args.e is None or args.a is None:
            raise DomainError("descent coeff needs --e and --a")
        b = RamifiedBoundary(args.e, args.a)
        return _dump({"e": b.e, "a": format_q(b.a), "coarse": format_q(coarse_coefficient(b))})
    result = sweep(args.m_max, args.e_max, args.q_max)
    result["status"] = "pass" if result["failures"] == 0 else "fail"
    return _dump(result)


def cmd_oracle(args) -> str:
    bounds = args.bounds if args.bounds == "default" else json.loads(args.bounds)
    scope = "all" if args.scope == "all" else args.scope.split(",")
    reports = run_oracles(scope, bounds)
    return _dump({
        "all_agree": all(r.agree for r in reports),
        "reports": [r.to_dict() for r in reports],
    })


def render_report(g_min: int, g_max: int) -> str:
    """Markdown phase report for each genus in ``[g_min, g_max]``."""
    parts = []
    for g in range(g_min, g_max + 1):
        lines = [f"## Genus {g}", "", "| model | alpha | certified | contracted | discrepancy 9-11a |",
                 "|---|---|---|---|---|"]
        for model in (Model.MG_STACK, Model.PS_PULLBACK):
            rep = critical_alphas(g, model)
            for w in rep.walls:
                lines.append(
                    f"| {model.value} | {format_q(w.alpha)} | {'yes' if w.certified else 'no'} | "
                    f"{', '.join(map(str, w.contracted))} | {format_q(discrepancy_coefficient(w.alpha))} |"
                )
        loci = contracted_loci_description(g)
        lines += ["", "```", loci.text, "```", "",
                  "| alpha | stack coefficient of delta_1 | coarse coefficient of Delta_1 |", "|---|---|---|"]
        for text in REPORT_ALPHAS:
            a = parse_q(text)
            coarse = coarse_coefficient(RamifiedBoundary(2, a))
            dagger = log_canonical_divisor(g, a, Model.COARSE_DAGGER).boundary_weight(1)
            if coarse != dagger:
                raise ArithmeticError(f"coarse coefficient mismatch at alpha={text}")
            lines.append(f"| {text} | {text} | {format_q(coarse)} |")
        parts.append("\n".join(lines) + "\n")
    return "\n".join(parts)


def cmd_report(args) -> str:
    for g in (args.g_min, args.g_max):
        if not 3 <= g <= 100:
            raise DomainError(f"genus range must lie in [3, 100], got {g}")
    return render_report(args.g_min, args.g_max)


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--tsv", action="store_true", help="emit tables as TSV")

    p = argparse.ArgumentParser(prog="mgbar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nef-check", parents=[common], help="F-curve nefness test")
    s.add_argument("--genus", type=int)
    s.add_argument("--alpha", type=_rational)
    s.add_argument("--model", type=_model, default=Model.MG_STACK)
    s.add_argument("--class", dest="class_file", metavar="FILE", help="divisor class JSON")
    s.set_defaults(func=cmd_nef_check)

    s = sub.add_parser("phases", parents=[common], help="critical alpha values")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--model", type=_model, default=Model.MG_STACK)
    s.set_defaults(func=cmd_phases)

    s = sub.add_parser("fcurves", parents=[common], help="list F-curves or their intersection table")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--alpha", type=_rational)
    s.add_argument("--model", type=_model, default=Model.MG_STACK)
    s.set_defaults(func=cmd_fcurves)

    s = sub.add_parser("vnprofile", parents=[common], help="dimension profile of V_n")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_vnprofile)

    s = sub.add_parser("graph", parents=[common], help="dual graph operations")
    s.add_argument("action", choices=["check", "transform", "equiv"])
    s.add_argument("file")
    s.add_argument("other", nargs="?")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("descent", parents=[common], help="stack to coarse coefficients")
    s.add_argument("action", choices=["coeff", "sweep"])
    s.add_argument("--e", type=int)
    s.add_argument("--a", type=_rational)
    s.add_argument("--m-max", type=int, default=200)
    s.add_argument("--e-max", type=int, default=20)
    s.add_argument("--q-max", type=int, default=12)
    s.set_defaults(func=cmd_descent)

    s = sub.add_parser("oracle", parents=[common], help="cross-check against brute-force oracles")
    s.add_argument("action", choices=["run"])
    s.add_argument("--scope", default="all", help="'all' or comma-separated scopes")
    s.add_argument("--bounds", default="default", help="'default' or a JSON object of overrides")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("report", parents=[common], help="markdown phase report")
    s.add_argument("--g-min", type=int, default=3)
    s.add_argument("--g-max", type=int, default=10)
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (DomainError, ValueError, RegimeError, ArithmeticError, OSError) as exc:
        print(f"mgbar {args.command}: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
