"""Command-line surface: analyze, enumerate, verify.

Exit codes: 0 success, 1 internal inconsistency (the four two-level
characterizations disagree), 2 unparseable input, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import certificates as ct
from . import constructions as cn
from . import enumeration as en
from . import geometry as ge
from . import graphs as gr
from . import ideals as idl
from . import matroid as mt
from .errors import MatlevelError, ParseError, SizeLimit, UnknownName

REPORT_SCHEMA = 1


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MATROID_THREADS", "1")))
    except ValueError:
        return 1


def load_input(spec: str) -> tuple[str, mt.Matroid]:
    """Resolve a catalog name, matroid JSON file, or graph edge list."""
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            try:
                return (spec, mt.Matroid.from_json(text))
            except (KeyError, ValueError, MatlevelError) as exc:
                raise ParseError(f"bad matroid JSON: {exc}") from exc
        return (spec, gr.graphic_matroid(gr.parse_edge_list(text)))
    try:
        return (spec, mt.catalog(spec))
    except UnknownName:
        raise ParseError(f"not a file or catalog name: {spec!r}")


def _facet_row(f: ge.FacetDescriptor) -> dict:
    return {
        "kind": f.kind,
        "subset": list(f.subset),
        "rank": f.rank_subset,
        "level_values": list(f.level_values),
        "levelness": f.levelness,
    }


def analysis_report(m: mt.Matroid, name: str, args) -> dict:
    conn = mt.connectivity(m)
    lev, wit = ge.levelness(m)
    verdicts = {
        "levelness": lev <= 2,
        "excluded_minor": en.is_two_level_by_minors(m),
        "decomposition": cn.is_two_level_by_decomposition(m),
        "generation_degree": idl.generation_degree_at_most(
            ge.base_configuration(m), 2
        ),
    }
    agree = len(set(verdicts.values())) == 1
    report = {
        "schema": REPORT_SCHEMA,
        "input": name,
        "n": m.n,
        "rank": m.rank,
        "bases": len(m.bases),
        "connectivity": {
            "count": conn.count,
            "components": [list(c) for c in conn.components],
        },
        "levelness": {
            "value": lev,
            "witness": _facet_row(wit) if wit else None,
        },
        "two_level": {**verdicts, "agree": agree},
        "decomposition": json.loads(cn.decompose(m).to_json()),
    }
    if conn.count == 1:
        report["facets"] = [_facet_row(f) for f in ge.flacets(m)]
        report["theta"] = {"lower": 1 if lev <= 2 else 2, "upper": None}
    if args.sos and conn.count == 1:
        lo, up = ct.theta_rank_estimate(m, max_k=args.max_k, tol=args.tol)
        report["theta"] = {
            "lower": lo,
            "upper": up,
            "max_k": args.max_k,
            "tol": args.tol,
        }
    if args.slack and conn.count == 1:
        report["slack_csv"] = ge.slack_matrix(m).to_csv()
    if args.ideal:
        gb = idl.vanishing_ideal(ge.base_configuration(m))
        report["ideal"] = {
            "basis": [idl.poly_str(g) for g in gb.basis],
            "standard_monomial_count": len(gb.standard_monomials),
            "hilbert": list(gb.hilbert),
            "max_degree": gb.max_degree,
        }
    if args.hrk and conn.count == 1:
        try:
            report["psd_minimal"] = ct.psd_minimality_verdict(m, budget=args.budget)
        except MatlevelError as exc:
            report["psd_minimal"] = f"inconclusive: {exc}"
    return report


def _print_report(report: dict, fmt: str, out=None):
    if out is None:
        out = sys.stdout
    if fmt == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    w = out.write
    w(f"input: {report['input']}\n")
    w(
        f"matroid: n={report['n']} rank={report['rank']} "
        f"bases={report['bases']} components={report['connectivity']['count']}\n"
    )
    lev = report["levelness"]
    w(f"levelness: {lev['value']}")
    if lev["witness"]:
        w(f"  (witness {lev['witness']['kind']} {set(lev['witness']['subset'])})")
    w("\n")
    tl = report["two_level"]
    w(
        "two-level verdicts: "
        + " ".join(f"{k}={tl[k]}" for k in sorted(tl) if k != "agree")
        + f"  agree={tl['agree']}\n"
    )
    if "theta" in report:
        th = report["theta"]
        w(f"theta rank: lower={th['lower']} upper={th['upper']}\n")
    if "facets" in report:
        w(f"facets ({len(report['facets'])}):\n")
        for f in report["facets"]:
            w(
                f"  {f['kind']:22s} {set(f['subset'])!s:24s} rank={f['rank']} "
                f"values={f['level_values']}\n"
            )
    w(f"decomposition: {json.dumps(report['decomposition'])}\n")
    if "ideal" in report:
        gb = report["ideal"]
        w(
            f"ideal: {len(gb['basis'])} basis elements, max degree "
            f"{gb['max_degree']}, hilbert {gb['hilbert']}\n"
        )
    if "psd_minimal" in report:
        w(f"psd-minimal: {report['psd_minimal']}\n")
    if "slack_csv" in report:
        w("slack matrix:\n" + report["slack_csv"])


def cmd_analyze(args) -> int:
    try:
        name, m = load_input(args.input)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = analysis_report(m, name, args)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _print_report(report, args.format)
    return 0 if report["two_level"]["agree"] else 1


def cmd_enumerate(args) -> int:
    try:
        found = en.minimally_k_level(args.minimally_level, args.n)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for m in found:
        if m.n != args.n:
            continue
        lev, wit = ge.levelness(m)
        line = {
            "n": m.n,
            "rank": m.rank,
            "bases": [list(mt.set_of(b)) for b in m.bases],
            "levelness": lev,
            "witness": list(wit.subset) if wit else None,
            "two_level": lev <= 2,
        }
        print(json.dumps(line, sort_keys=True))
    return 0


def _suite_paper_props() -> list[tuple[str, bool]]:
    checks = []
    for name in ("MK4", "W3_whirl", "Q6", "P6"):
        checks.append(
            (f"levelness({name}) == 3", ge.levelness(mt.catalog(name))[0] == 3)
        )
    for n in (3, 4, 5):
        checks.append(
            (
                f"levelness(wheel({n})) == {n}",
                ge.levelness(mt.catalog(f"wheel({n})"))[0] == n,
            )
        )
    for name in ("U(4,2)", "U(5,2)"):
        m = mt.catalog(name)
        ok = (
            ge.levelness(m)[0] <= 2
            and en.is_two_level_by_minors(m)
            and cn.is_two_level_by_decomposition(m)
            and idl.generation_degree_at_most(ge.base_configuration(m), 2)
        )
        checks.append((f"{name} two-level by all four characterizations", ok))
    for name in ("MK4", "W3_whirl"):
        m = mt.catalog(name)
        ok = not (
            en.is_two_level_by_minors(m)
            or cn.is_two_level_by_decomposition(m)
            or idl.generation_degree_at_most(ge.base_configuration(m), 2)
        )
        checks.append((f"{name} not two-level by all four characterizations", ok))
    return checks


def _suite_psd() -> list[tuple[str, bool]]:
    a0 = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    out = ct.hadamard_min_rank(a0)
    checks = [("Hrk(J4 - I4) == 4", out.exhaustive and out.min_rank_found == 4)]
    sub = ct._fixed_certificate(mt.catalog("MK4"))
    out = ct.hadamard_min_rank(sub)
    checks.append(("MK4 7x7 submatrix Hrk == 7", out.exhaustive and out.min_rank_found == 7))
    checks.append(("U(4,2) psd-minimal", ct.psd_minimality_verdict(mt.uniform(4, 2))))
    checks.append(("MK4 not psd-minimal", not ct.psd_minimality_verdict(mt.catalog("MK4"))))
    return checks


def _suite_graphs() -> list[tuple[str, bool]]:
    return [
        ("k=2 excluded minor equivalence (<= 6 edges)", en.graph_excluded_minor_check(2)),
        ("k=3 excluded minor equivalence (<= 6 edges)", en.graph_excluded_minor_check(3)),
        ("3-level decomposition pieces (<= 6 edges)", en.three_level_graph_decomposition_check()),
    ]


def _suite_ideals() -> list[tuple[str, bool]]:
    import itertools

    checks = []
    v = ge.point_config([(1, 0), (0, 1), (2, 0), (0, 2)])
    checks.append(("4-point config generated in degree 2", idl.generation_degree_at_most(v, 2)))
    for name in ("MK4", "Q6"):
        vv = ge.base_configuration(mt.catalog(name))
        checks.append(
            (f"{name} not generated in degree 2", not idl.generation_degree_at_most(vv, 2))
        )
    for n in (3, 4):
        pts = [p for p in itertools.product((0, 1), repeat=n) if any(p)]
        vv = ge.point_config(pts)
        checks.append(
            (
                f"separation degree of punctured {n}-cube == {n}",
                idl.separation_degree(vv, (0,) * n) == n,
            )
        )
    return checks


_SUITES = {
    "paper-props": _suite_paper_props,
    "psd": _suite_psd,
    "graphs-k-level": _suite_graphs,
    "ideals": _suite_ideals,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    workers = _threads()
    for name in names:
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                checks = pool.submit(_SUITES[name]).result()
        else:
            checks = _SUITES[name]()
        for label, ok in checks:
            print(f"[{name}] {'PASS' if ok else 'FAIL'}  {label}")
            if not ok:
                failed += 1
    print(f"{failed} failures" if failed else "all checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matlevel",
        description="Levelness, Theta-rank bounds, and psd-minimality "
        "certificates for matroid base configurations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one matroid")
    a.add_argument("input", help="catalog name, matroid JSON file, or graph edge list file")
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.add_argument("--slack", action="store_true", help="include the slack matrix")
    a.add_argument("--ideal", action="store_true", help="include Groebner data")
    a.add_argument("--hrk", action="store_true", help="include the psd-minimality verdict")
    a.add_argument("--sos", action="store_true", help="include numerical Theta bounds")
    a.add_argument("--max-k", type=int, default=3, help="largest sos degree tried")
    a.add_argument("--tol", type=float, default=1e-8, help="Gram feasibility tolerance")
    a.add_argument("--budget", type=int, default=1 << 20, help="Hadamard sign-pattern budget")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="minimally k-level matroids on n elements")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--minimally-level", type=int, required=True)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(_SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
