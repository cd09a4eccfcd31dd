"""Command-line interface.

Exit status: 0 on success, 1 when a computation fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable

from .bounds import run_all_bounds
from .coulson import FORMS, QuadratureConfig, QuadratureError, energy_by_form
from .equienergetic import build_Lm_pair, pad_with_isolated, seed_pair, verify_pair
from .graph import DEFAULT_SIZE_CAP, FAMILIES, Graph, GraphError, build_family
from .graphio import parse_edge_list, parse_graph6, read_graph6_lines, write_graph6
from .isi import NoClosedForm, adjacency_energy, closed_form_energy, isi_index, q_value, summarize
from .spectral import EigenConvergenceError, char_poly_coeffs
from .trees import check_conjecture

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2
COMPUTE_ERRORS = (EigenConvergenceError, QuadratureError, ArithmeticError)


class UsageError(Exception):
    pass


# -- output -----------------------------------------------------------------


def _clean(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _fmt(x, digits: int) -> str:
    if isinstance(x, float):
        return format(x, f".{digits}g")
    if isinstance(x, (list, tuple)):
        return ";".join(_fmt(v, digits) for v in x)
    if x is None:
        return ""
    if isinstance(x, dict):
        return json.dumps(_clean(x))
    return str(x)


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        # repr-based float output is the shortest string that round-trips exactly
        out.write(json.dumps(_clean(record), allow_nan=False) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(_fmt(v, 17) for v in record.values())
    else:
        for k, v in record.items():
            out.write(f"{k}: {_fmt(v, 6)}\n")


# -- input ------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph_from_file(path: str) -> Graph:
    """Edge-list if the first line is two integers, otherwise a one-line graph6 file."""
    text = _read_text(path)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{path}: empty input")
    head = lines[0].split()
    try:
        if len(head) == 2 and all(t.lstrip("-").isdigit() for t in head):
            return parse_edge_list(text)
        return parse_graph6(lines[0])
    except GraphError as exc:
        raise UsageError(f"{path}: line 1: {exc}") from None


def _input_graph(args) -> tuple[Graph, str | None, tuple[int, ...]]:
    if args.graph6 is not None:
        try:
            return parse_graph6(args.graph6), None, ()
        except GraphError as exc:
            raise UsageError(f"bad graph6 string: {exc}") from None
    if args.graph6_file is not None:
        text = _read_text(args.graph6_file)
        for lineno, line in read_graph6_lines(io.StringIO(text)):
            try:
                return parse_graph6(line), None, ()
            except GraphError as exc:
                raise UsageError(f"{args.graph6_file}: line {lineno}: {exc}") from None
        raise UsageError(f"{args.graph6_file}: no graph found")
    if args.edge_list is not None:
        text = _read_text(args.edge_list)
        try:
            return parse_edge_list(text), None, ()
        except GraphError as exc:
            raise UsageError(f"{args.edge_list}: {exc}") from None
    if args.family is not None:
        params = tuple(p for p in (args.m, args.n) if p is not None)
        try:
            return build_family(args.family, *params), args.family, params
        except (GraphError, TypeError) as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("no input graph: give --graph6, --graph6-file, --edge-list or --family")


# -- commands ---------------------------------------------------------------


def _energy_record(g: Graph, family: str | None = None, params: tuple[int, ...] = ()) -> dict:
    rec = {"graph": write_graph6(g), **summarize(g).to_dict(), "adjacency_energy": adjacency_energy(g)}
    target = family if family is not None else g
    try:
        rec["closed_form_energy"] = closed_form_energy(target, *params)
    except NoClosedForm:
        rec["closed_form_energy"] = None
    return rec


def _spectrum_record(g: Graph) -> dict:
    s = summarize(g).spectrum
    return {
        "graph": write_graph6(g),
        "spectrum": list(s.values),
        "distinct": [v for v, _ in s.grouped()],
        "multiplicities": [k for _, k in s.grouped()],
        "char_poly": list(char_poly_coeffs(s).coeffs),
    }


def _index_record(g: Graph) -> dict:
    return {"graph": write_graph6(g), "n": g.n, "m": g.m, "isi_index": isi_index(g), "q": q_value(g)}


def _bounds_record(g: Graph) -> dict:
    report = run_all_bounds(g, write_graph6(g))
    return {**report.to_dict(), "all_hold": report.all_hold}


def _coulson_record(g: Graph, forms: list[str], cfg: QuadratureConfig) -> dict:
    s = summarize(g)
    coeffs = char_poly_coeffs(s.spectrum)
    rec = {"graph": write_graph6(g), "spectral_energy": s.energy}
    for form in forms:
        val = energy_by_form(coeffs, form, cfg)
        rec[f"{form}_energy"] = val
        rec[f"{form}_abs_error"] = abs(val - s.energy)
    return rec


def _quad_config(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(
            cutoff=args.cutoff, panels=args.panels, target_tol=args.target_tol, rule=args.rule
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _coulson_forms(args) -> list[str]:
    return sorted(FORMS) if args.coulson_form == "all" else [args.coulson_form]


def _single_graph_command(args) -> Callable[[Graph], dict]:
    cmd = args.command if args.command != "batch" else args.run
    if cmd == "energy":
        return _energy_record
    if cmd == "spectrum":
        return _spectrum_record
    if cmd == "index":
        return _index_record
    if cmd == "bounds":
        return _bounds_record
    cfg, forms = _quad_config(args), _coulson_forms(args)
    return lambda g: _coulson_record(g, forms, cfg)


def _cmd_single(args, out) -> int:
    g, family, params = _input_graph(args)
    if args.command == "energy":
        record = _energy_record(g, family, params)
    else:
        record = _single_graph_command(args)(g)
    if args.command == "bounds" and args.format == "csv":
        out.write(run_all_bounds(g, write_graph6(g)).to_csv())
        return EXIT_OK
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_batch(args, out) -> int:
    text = _read_text(args.input)
    fn = _single_graph_command(args)
    records = []
    for lineno, line in read_graph6_lines(io.StringIO(text)):
        try:
            records.append({"line": lineno, **fn(parse_graph6(line))})
        except (GraphError, *COMPUTE_ERRORS) as exc:
            records.append({"line": lineno, "input": line, "error": str(exc)})
    if args.format == "csv":
        columns = list(dict.fromkeys(k for rec in records for k in rec))
        writer = csv.DictWriter(out, columns, restval="", lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _fmt(v, 17) for k, v in rec.items()})
        return EXIT_OK
    for rec in records:
        _emit(rec, args.format, out)
        if args.format == "human":
            out.write("\n")
    return EXIT_OK


def _cmd_conjecture(args, out) -> int:
    try:
        report = check_conjecture(args.n, args.tol, args.full_ranking)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(report.to_dict(), args.format, out)
    return EXIT_OK


def _cmd_equienergetic(args, out) -> int:
    if (args.g1 is None) != (args.g2 is None):
        raise UsageError("give both --g1 and --g2, or neither for the built-in pair")
    if args.g1 is None:
        g1, g2 = seed_pair()
    else:
        g1, g2 = _graph_from_file(args.g1), _graph_from_file(args.g2)
    try:
        if args.iterate == 0:
            pair = verify_pair(g1, g2)
        else:
            pair = build_Lm_pair(g1, g2, args.iterate, args.size_cap)
        if args.pad:
            pair = pad_with_isolated(pair, args.pad)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(pair.to_dict(), args.format, out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", metavar="STR", help="graph6 string")
    src.add_argument("--graph6-file", metavar="PATH", help="graph6 file (first graph used; '-' for stdin)")
    src.add_argument("--edge-list", metavar="PATH", help="edge list: 'n m' then m lines 'u v', 1-indexed")
    src.add_argument("--family", choices=sorted(FAMILIES), help="built-in graph family")
    p.add_argument("--n", type=int, help="family order (second part size for complete-bipartite)")
    p.add_argument("--m", type=int, help="first part size for complete-bipartite")


def _add_quadrature(p: argparse.ArgumentParser) -> None:
    p.add_argument("--coulson-form", choices=[*sorted(FORMS), "all"], default="all")
    p.add_argument("--rule", choices=["tan", "truncated"], default="tan")
    p.add_argument("--cutoff", type=float, default=None, help="truncation point for --rule truncated")
    p.add_argument("--panels", type=int, default=16)
    p.add_argument("--target-tol", type=float, default=1e-6)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isienergy", description="ISI spectra, energies and bounds of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=["json", "csv", "human"], default="json")
        return p

    for name, help_ in [
        ("energy", "ISI energy summary"),
        ("spectrum", "ISI spectrum and characteristic polynomial"),
        ("index", "ISI index"),
        ("bounds", "check every energy and eigenvalue bound"),
    ]:
        _add_input(common(name, help_))

    p = common("coulson", "energy from the integral formulas")
    _add_input(p)
    _add_quadrature(p)

    p = common("conjecture", "rank all trees of one order by ISI energy")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--full-ranking", action="store_true")

    p = common("equienergetic", "build and verify an equienergetic pair")
    p.add_argument("--g1", metavar="PATH")
    p.add_argument("--g2", metavar="PATH")
    p.add_argument("--iterate", type=int, default=2, help="line-graph iterations (0 = compare inputs as given)")
    p.add_argument("--pad", type=int, default=0, help="isolated vertices to add to both graphs")
    p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)

    p = common("batch", "run one command over every line of a graph6 file")
    p.add_argument("--input", required=True, metavar="PATH", help="graph6 file, '-' for stdin")
    p.add_argument("--run", choices=["energy", "spectrum", "index", "bounds", "coulson"], default="energy")
    _add_quadrature(p)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"conjecture": _cmd_conjecture, "equienergetic": _cmd_equienergetic, "batch": _cmd_batch}
    handler = handlers.get(args.command, _cmd_single)
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"isienergy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (*COMPUTE_ERRORS, GraphError) as exc:
        print(f"isienergy: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
