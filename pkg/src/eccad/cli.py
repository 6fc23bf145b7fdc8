"""Command-line driver: formula -> EC designation -> projection -> lifting -> verification."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from statistics import mean

from . import bounds as bnd
from .ecpipe import (
    Candidates,
    InconsistentECs,
    candidates_for,
    enumerate_designations,
    manual_designation,
)
from .elim import ElimError, iterated_chain, resultant
from .formula import Formula, defining_polynomials, explicit_ec_list, parse_formula, replace_ecs
from .groebner import buchberger, is_groebner, is_reduced
from .lifting import CAD, Fail, ResourceLimit, lift_all, to_json, verify_truth_invariance
from .poly import ParseError, PolyError, VarOrder, default_order, parse_poly, scan_names
from .projection import DegreeLimit, project_all

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_FAIL = 3
EXIT_INCONSISTENT = 4
EXIT_RESOURCE = 5

STRATEGIES = ("none", "explicit", "resultants", "gb-replace", "gb-augment", "gb")
DEFAULT_STRATEGY = "gb-replace"
JOBS_ENV = "ECCAD_JOBS"


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# pipeline


@dataclass
class Setup:
    """Everything fixed before designations are chosen."""

    formula: Formula
    strategy: str
    candidates: Candidates
    designations: list
    manual: bool = False


def prepare(formula: Formula, strategy: str = DEFAULT_STRATEGY, designate=None) -> Setup:
    if strategy not in STRATEGIES:
        raise UsageError(f"unknown EC strategy {strategy!r}")
    E = explicit_ec_list(formula)
    cands = candidates_for(strategy, E, formula.order)
    if designate:
        D = manual_designation(formula.order, designate)
        return Setup(formula, strategy, cands, [D], True)
    return Setup(formula, strategy, cands, enumerate_designations(cands))


def input_polys(setup: Setup, designation) -> set:
    F = setup.formula
    if setup.strategy in ("gb", "gb-replace") and setup.candidates.basis is not None and not setup.manual:
        A = defining_polynomials(replace_ecs(F, setup.candidates.basis.gens))
    else:
        A = defining_polynomials(F)
    return set(A) | set(designation.contents)


@dataclass
class RunResult:
    label: str
    ecs: dict
    sources: dict
    counts: list = field(default_factory=list)
    fail: str | None = None
    relaxed: int = 0
    levels: list = field(default_factory=list)
    verify: dict | None = None
    timings: dict = field(default_factory=dict)
    cad: CAD | None = None

    @property
    def cells(self):
        return self.counts[-1] if self.counts and not self.fail else None

    def as_json(self, timing: bool = True) -> dict:
        out = {
            "designation": self.label,
            "ecs": self.ecs,
            "sources": self.sources,
            "cells": self.cells,
            "counts": self.counts,
            "fail": self.fail,
            "relaxed": self.relaxed,
            "levels": self.levels,
            "verify": self.verify,
        }
        if timing:
            out["timings"] = self.timings
        return out


def build(setup: Setup, index: int, verify: int = 0, seed: int = 0,
          max_degree: int | None = None, max_cells: int | None = None, keep: bool = False) -> RunResult:
    """Projection, lifting and optional verification for one designation."""
    D = setup.designations[index]
    order = setup.formula.order
    res = RunResult(D.label(), {v: str(p) for v, p in D.as_dict().items()}, D.sources())
    t0 = time.perf_counter()
    run = project_all(input_polys(setup, D), order, D.as_dict(), max_degree=max_degree)
    t1 = time.perf_counter()
    res.timings["projection"] = round(t1 - t0, 4)
    res.levels = [
        {"level": s.level, "var": s.var, "count": s.count, "basis": s.basis_size,
         "op": s.op, "max_degrees": list(s.max_degrees), "total_degree": s.max_total_degree}
        for s in run.stats()
    ]
    cad = lift_all(run, max_cells=max_cells)
    t2 = time.perf_counter()
    res.timings["lifting"] = round(t2 - t1, 4)
    if isinstance(cad, Fail):
        res.fail = cad.message(order)
        return res
    res.counts = cad.counts()
    res.relaxed = len(cad.relaxed)
    if verify:
        rep = verify_truth_invariance(cad, setup.formula, verify, seed)
        res.verify = {
            "trials": rep.trials,
            "checked": rep.checked,
            "violations": len(rep.violations),
            "examples": [[str(x) for x in v[0]] for v in rep.violations[:3]],
        }
        res.timings["verify"] = round(time.perf_counter() - t2, 4)
    if keep:
        res.cad = cad
    return res


def _worker(job):
    text, order, strategy, designate, index, opts = job
    f = parse_formula(text, order)
    setup = prepare(f, strategy, _parse_designations(designate, f.order))
    return build(setup, index, **opts)


def build_all(setup: Setup, text: str, designate=None, jobs: int = 1, **opts) -> list:
    """Build every designation; with ``jobs > 1`` builds run in worker processes."""
    n = len(setup.designations)
    if jobs <= 1 or n <= 1:
        return [build(setup, i, **opts) for i in range(n)]
    import multiprocessing as mp

    order = " > ".join(reversed(setup.formula.order.names))
    work = [(text, order, setup.strategy, designate, i, opts) for i in range(n)]
    with mp.get_context("spawn").Pool(min(jobs, n)) as pool:
        return pool.map(_worker, work)


def summarize(results: list) -> dict:
    ok = [r for r in results if not r.fail]
    if not ok:
        return {"runs": len(results), "failed": len(results)}
    cells = [r.cells for r in ok]
    best = min(ok, key=lambda r: r.cells)
    worst = max(ok, key=lambda r: r.cells)
    return {
        "runs": len(results),
        "failed": len(results) - len(ok),
        "min": best.cells,
        "max": worst.cells,
        "avg": round(mean(cells), 2),
        "argmin": best.label,
        "argmax": worst.label,
    }


# --------------------------------------------------------------------------
# input helpers


def _read_input(args) -> tuple:
    if getattr(args, "expr", None):
        return args.expr
    if not args.file:
        raise UsageError("no input: give a formula file or -e TEXT")
    if args.file == "-":
        return sys.stdin.read()
    with open(args.file) as fh:
        return fh.read()


def _load(args) -> tuple:
    text = _read_input(args)
    return text, parse_formula(text, args.order)


def _parse_designations(items, order: VarOrder):
    if not items:
        return None
    out = []
    for it in items:
        var, sep, body = it.partition(":")
        if not sep:
            raise UsageError(f"--designate expects v:poly, got {it!r}")
        p = parse_poly(body, order)
        if p.mvar() != order.index(var.strip()):
            raise UsageError(f"{p} does not have main variable {var.strip()}")
        out.append(p)
    return out


def _poly_inputs(args) -> tuple:
    """Polynomials from positional arguments or a file (formula or one per line)."""
    if args.file:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        try:
            f = parse_formula(text, args.order)
            return [a for a in explicit_ec_list(f)] or sorted(defining_polynomials(f), key=str), f.order
        except ParseError:
            lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
            items = [ln for ln in lines if ln and not ln.startswith("vars:")]
            header = [ln[5:] for ln in lines if ln.startswith("vars:")]
            order = args.order or (header[0] if header else None)
            return _polys_from_strings(items, order)
    if not args.polys:
        raise UsageError("no polynomials given")
    return _polys_from_strings(args.polys, args.order)


def _polys_from_strings(items, order):
    if order is None:
        names = []
        for s in items:
            names.extend(scan_names(s))
        order = default_order(names or ["x"])
    elif isinstance(order, str):
        order = VarOrder.parse(order)
    return [parse_poly(s, order) for s in items], order


# --------------------------------------------------------------------------
# reports


def _fmt_table(head, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    w = [max(len(r[j]) for r in rows + [head]) for j in range(len(head))]
    fmt = "  ".join("{:<%d}" % k for k in w)
    return "\n".join(fmt.format(*r).rstrip() for r in [head] + rows)


def _run_lines(r: RunResult, timing: bool) -> list:
    if r.fail:
        line = f"{r.label}: {r.fail}"
    else:
        line = f"{r.label}: {r.cells} cells, per level {r.counts}"
        if r.relaxed:
            line += f", {r.relaxed} relaxed stacks"
        if r.verify is not None:
            line += f", verify {r.verify['checked']}/{r.verify['trials']} points, {r.verify['violations']} violations"
    if timing:
        line += "  [" + ", ".join(f"{k} {v:.2f}s" for k, v in r.timings.items()) + "]"
    return [line]


def _summary_lines(s: dict) -> list:
    if "min" not in s:
        return [f"all {s['runs']} builds failed"]
    return [
        f"builds: {s['runs']} ({s['failed']} failed)",
        f"cells: min {s['min']} {s['argmin']}, max {s['max']} {s['argmax']}, avg {s['avg']}",
    ]


def _designation_lines(setup: Setup) -> list:
    out = []
    for D in setup.designations:
        ecs = ", ".join(f"{v}: {p}" for v, p in D.as_dict().items()) or "none"
        out.append(f"  {D.label()}  {ecs}")
    return out


def _write_json(path, payload):
    text = json.dumps(payload, indent=2, sort_keys=False)
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _text_out(args):
    # keep stdout clean for a JSON report written there
    return sys.stderr if getattr(args, "json", None) == "-" else sys.stdout


def _echo(f: Formula, strategy: str) -> dict:
    return {"formula": str(f), "order": list(reversed(f.order.names)), "strategy": strategy}


def _designation_json(setup: Setup) -> list:
    return [
        {"label": D.label(), "ecs": {v: str(p) for v, p in D.as_dict().items()}, "sources": D.sources()}
        for D in setup.designations
    ]


def _opts(args) -> dict:
    return {
        "verify": args.verify,
        "seed": args.seed,
        "max_degree": args.max_degree,
        "max_cells": args.max_cells,
    }


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


# --------------------------------------------------------------------------
# commands


def cmd_cad(args) -> int:
    text, f = _load(args)
    setup = prepare(f, args.ec_strategy, _parse_designations(args.designate, f.order))
    out = _text_out(args)
    out.write(f"formula: {f}\n")
    out.write(f"order: {' > '.join(reversed(f.order.names))}\n")
    out.write(f"strategy: {setup.strategy}, {len(setup.designations)} designation(s)\n")
    out.writelines(ln + "\n" for ln in _designation_lines(setup))
    if args.enumerate:
        results = build_all(setup, text, args.designate, _jobs(args), **_opts(args))
    else:
        results = [build(setup, 0, keep=bool(args.cells), **_opts(args))]
    for r in results:
        out.writelines(ln + "\n" for ln in _run_lines(r, args.timing))
    summary = summarize(results)
    if args.enumerate:
        out.writelines(ln + "\n" for ln in _summary_lines(summary))
    if args.cells and results[0].cad is not None:
        cad = results[0].cad
        truths = to_json(cad, f)["cells"]
        for c in truths:
            out.write(f"  {c['index']}  {'T' if c['truth'] else 'F'}\n")
    if args.json:
        payload = {
            "input": _echo(f, setup.strategy),
            "designations": _designation_json(setup),
            "runs": [r.as_json(args.timing) for r in results],
            "summary": summary,
        }
        if args.cells and results[0].cad is not None:
            payload["cad"] = to_json(results[0].cad, f)
        _write_json(args.json, payload)
    if any(r.verify and r.verify["violations"] for r in results):
        return EXIT_FAIL
    if all(r.fail for r in results):
        return EXIT_FAIL
    return EXIT_OK


def _candidate_degrees(cands: Candidates) -> dict:
    return {v: max((c.poly.total_degree() for c in b), default=None) for v, b in cands.buckets.items()}


def cmd_compare(args) -> int:
    text, f = _load(args)
    columns = {}
    errors = {}
    for strat in ("resultants", "gb-replace"):
        try:
            setup = prepare(f, strat)
        except InconsistentECs as e:
            errors[strat] = str(e)
            continue
        results = build_all(setup, text, None, _jobs(args), **_opts(args))
        columns[strat] = (setup, results, summarize(results))
    out = _text_out(args)
    out.write(f"formula: {f}\n")
    for strat, msg in errors.items():
        out.write(f"{strat}: {msg}\n")
    if errors and not columns:
        if args.json:
            _write_json(args.json, {"input": _echo(f, "compare"), "errors": errors})
        return EXIT_INCONSISTENT
    names = list(columns)
    rows = []
    for key in ("runs", "failed", "min", "avg", "max"):
        rows.append([key] + [columns[s][2].get(key, "-") for s in names])
    out.write(_fmt_table(["cells"] + names, rows) + "\n\n")
    # highest total degree among EC candidates, per main variable
    deg = {s: _candidate_degrees(columns[s][0].candidates) for s in names}
    vars_ = list(reversed(f.order.names))
    rows = [[v] + [deg[s].get(v) if deg[s].get(v) is not None else "-" for s in names] for v in vars_]
    out.write(_fmt_table(["EC tdeg"] + names, rows) + "\n\n")
    # highest degree in any variable of the projection sets, worst designation
    lvl = {}
    for s in names:
        per = {}
        for r in columns[s][1]:
            for L in r.levels:
                per[L["level"]] = max(per.get(L["level"], 0), max(L["max_degrees"]))
        lvl[s] = per
    rows = [[f"{k} ({f.order.names[k - 1]})"] + [lvl[s].get(k, "-") for s in names] for k in range(len(f.order), 0, -1)]
    out.write(_fmt_table(["proj deg"] + names, rows) + "\n")
    if args.timing:
        for s in names:
            t = sum(sum(r.timings.values()) for r in columns[s][1])
            out.write(f"time {s}: {t:.2f}s\n")
    if args.json:
        payload = {
            "input": _echo(f, "compare"),
            "designations": {s: _designation_json(columns[s][0]) for s in names},
            "runs": {s: [r.as_json(args.timing) for r in columns[s][1]] for s in names},
            "comparison": {
                "summary": {s: columns[s][2] for s in names},
                "ec_degrees": deg,
                "projection_degrees": {s: {str(k): v for k, v in lvl[s].items()} for s in names},
            },
            "errors": errors,
        }
        _write_json(args.json, payload)
    return EXIT_OK


def cmd_gb(args) -> int:
    polys, order = _poly_inputs(args)
    G = buchberger(polys, order)
    out = _text_out(args)
    if G.is_unit:
        out.write("basis: {1} (unit ideal)\n")
        return EXIT_INCONSISTENT if args.strict else EXIT_OK
    rows = []
    for i, g in enumerate(G.gens, 1):
        rows.append([f"g{i}", order.names[g.mvar()] if g.mvar() is not None else "-",
                     " ".join(str(d) for d in g.degrees()), g.total_degree(), str(g)])
    out.write(_fmt_table(["", "mvar", "degrees (" + ",".join(order.names) + ")", "tdeg", "polynomial"], rows) + "\n")
    out.write(f"groebner: {is_groebner(G.gens)}, reduced: {is_reduced(G)}\n")
    if args.json:
        _write_json(args.json, {"order": list(reversed(order.names)), "basis": [str(g) for g in G.gens]})
    return EXIT_OK


def cmd_resultant(args) -> int:
    polys, order = _poly_inputs(args)
    out = _text_out(args)
    if args.chain:
        from .ecpipe import propagate_resultants

        cands = propagate_resultants(polys, order)
        labels = {}
        for b in cands.buckets.values():
            for c in b:
                labels.setdefault(c.poly.normalized(), c.label)
        for v in reversed(order.names):
            for c in cands.buckets.get(v, ()):
                out.write(f"{c.label} = {c.poly}\n")
        out.write("\n")
        for s in cands.trace.steps:
            a, b = (labels.get(p.normalized(), str(p)) for p in s.inputs)
            shown = "0" if s.output.is_zero else labels.get(s.output.normalized(), str(s.output))
            out.write(f"res({a}, {b}, {s.var}) = {shown}\n")
        out.write("\n" + cands.trace.table() + "\n")
        return EXIT_OK
    if args.var is None:
        raise UsageError("resultant needs --var or --chain")
    if len(polys) == 2:
        out.write(f"{resultant(polys[0], polys[1], args.var)}\n")
        return EXIT_OK
    levels, trace = iterated_chain(polys, args.var.split(","))
    for v, lv in zip(args.var.split(","), levels):
        for p in lv:
            out.write(f"[{v}] {p}\n")
    out.write(trace.table() + "\n")
    return EXIT_OK


def cmd_project(args) -> int:
    text, f = _load(args)
    setup = prepare(f, args.ec_strategy, _parse_designations(args.designate, f.order))
    D = setup.designations[min(args.index, len(setup.designations) - 1)]
    run = project_all(input_polys(setup, D), f.order, D.as_dict(), max_degree=args.max_degree)
    out = _text_out(args)
    out.write(f"designation: {D.label()}\n")
    out.write(run.table() + "\n")
    for k in range(len(f.order), 0, -1):
        F = run.F[k - 1]
        if F:
            out.write(f"F_{k} ({f.order.names[k - 1]}): " + ", ".join(str(p) for p in sorted(F, key=str)) + "\n")
    if args.verbose:
        for k in range(len(f.order), 0, -1):
            out.write(f"B_{k}:\n")
            for p in sorted(run.B[k - 1], key=str):
                out.write(f"  {p}\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    variant = "iterated_resultant" if args.table == 1 else "gb"
    t = bnd.table_growth(args.n, args.m, args.d, args.l, variant)
    out = _text_out(args)
    out.write(f"Table {args.table}: n={args.n} m={args.m} d={args.d} l={args.l}\n")
    out.write(t.format() + "\n\n")
    out.write(t.format(evaluate=True) + "\n\n")
    out.write(f"product bound (+1 terms kept): {bnd.cell_bound(t, 'product_eq6')}\n")
    if args.l > 0:
        out.write(f"EC lifting bound: {bnd.cell_bound(t, 'ec_lifting_eq7')}\n")
    out.write(f"sign-invariant dominant term: {bnd.dominant_term(args.n, which='eq1')}"
              f" = {bnd.dominant_term(args.n, args.m, args.d, 0, 'eq1')}\n")
    if args.l > 0:
        out.write(f"EC dominant term: {bnd.dominant_term(args.n, l=args.l, which='eq2')}"
                  f" = {bnd.dominant_term(args.n, args.m, args.d, args.l, 'eq2')}\n")
    c = bnd.compare_gb_exponent(args.n, args.l)
    out.write(f"GB exponent of d: closed form {c.closed_form}, row product {c.by_rows} (offset {c.offset})\n")
    return EXIT_OK


def cmd_ecs(args) -> int:
    text, f = _load(args)
    strat = args.ec_strategy
    cands = candidates_for(strat, explicit_ec_list(f), f.order)
    out = _text_out(args)
    rows = []
    for v in reversed(f.order.names):
        for c in cands.buckets.get(v, ()):
            rows.append([v, c.label, c.source, " ".join(str(d) for d in c.poly.degrees()),
                         c.poly.total_degree(), str(c.poly)])
    out.write(_fmt_table(["mvar", "label", "source", "degrees (" + ",".join(f.order.names) + ")", "tdeg", "polynomial"], rows) + "\n")
    sizes = cands.sizes()
    out.write("bucket sizes: " + ", ".join(f"{v}:{n}" for v, n in sizes.items()) + f"; designations: {cands.count()}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    text, f = _load(args)
    setup = prepare(f, args.ec_strategy, _parse_designations(args.designate, f.order))
    trials = args.verify or 1000
    opts = dict(_opts(args), verify=trials)
    idx = range(len(setup.designations)) if args.enumerate else [0]
    bad = False
    for i in idx:
        r = build(setup, i, **opts)
        sys.stdout.writelines(ln + "\n" for ln in _run_lines(r, args.timing))
        bad = bad or bool(r.fail) or bool(r.verify and r.verify["violations"])
    return EXIT_FAIL if bad else EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def _formula_args(p, strategy=True, build_opts=True):
    p.add_argument("file", nargs="?", help="formula file ('-' for stdin)")
    p.add_argument("-e", "--expr", help="formula text instead of a file")
    p.add_argument("--order", help="variable order, e.g. 'z > y > x' (overrides the file header)")
    if strategy:
        p.add_argument("--ec-strategy", choices=STRATEGIES, default=DEFAULT_STRATEGY)
        p.add_argument("--designate", action="append", metavar="v:poly", help="manual EC for main variable v")
    if build_opts:
        p.add_argument("--verify", type=int, default=0, metavar="N", help="check N random points")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-degree", type=int)
        p.add_argument("--max-cells", type=int)
        p.add_argument("--jobs", type=int, help=f"worker processes (default ${JOBS_ENV} or 1)")
        p.add_argument("--timing", action="store_true", help="report wall-clock timings")


def _poly_args(p):
    p.add_argument("polys", nargs="*", help="polynomials")
    p.add_argument("-f", "--file", help="file with a formula or one polynomial per line")
    p.add_argument("--order", help="variable order, e.g. 'z > y > x'")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eccad", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cad", help="build a truth-invariant CAD")
    _formula_args(p)
    p.add_argument("--enumerate", action="store_true", help="build one CAD per designation")
    p.add_argument("--json", metavar="OUT", help="write a JSON report ('-' for stdout)")
    p.add_argument("--cells", action="store_true", help="list cells and truth values")
    p.set_defaults(func=cmd_cad)

    p = sub.add_parser("compare", help="resultant propagation against Groebner preconditioning")
    _formula_args(p, strategy=False)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gb", help="reduced lex Groebner basis")
    _poly_args(p)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--strict", action="store_true", help="exit 4 on the unit ideal")
    p.set_defaults(func=cmd_gb)

    for name in ("resultant", "elim"):
        p = sub.add_parser(name, help="resultants and elimination chains")
        _poly_args(p)
        p.add_argument("--var", help="variable (or comma list for a chain)")
        p.add_argument("--chain", action="store_true", help="propagate resultants from the top variable")
        p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("project", help="projection phase only")
    _formula_args(p, build_opts=False)
    p.add_argument("--index", type=int, default=0, help="designation index")
    p.add_argument("--max-degree", type=int)
    p.add_argument("-v", "--verbose", action="store_true", help="print the projection bases")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("bounds", help="growth tables and cell-count bounds")
    p.add_argument("--table", type=int, choices=(1, 2), default=1)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, default=1)
    p.add_argument("-d", type=int, default=1)
    p.add_argument("-l", type=int, default=0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ecs", help="EC candidates per main variable")
    _formula_args(p, build_opts=False)
    p.set_defaults(func=cmd_ecs)

    p = sub.add_parser("verify", help="build and check truth invariance")
    _formula_args(p)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE
    except InconsistentECs as e:
        sys.stdout.write(f"{e}\n")
        return EXIT_INCONSISTENT
    except (ResourceLimit, DegreeLimit) as e:
        sys.stderr.write(f"resource limit: {e}\n")
        return EXIT_RESOURCE
    except (PolyError, ElimError, bnd.BoundsError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
