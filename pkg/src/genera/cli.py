"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a failing suite, 2 on
invalid input and 3 when a computation exceeds an enforced ceiling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath

from . import chern, genus, lattice, verify
from .errors import CapabilityError, DomainError
from .lattice import IntPartition, SetPartition, partitions_of
from .zeta import (ZetaEvalContext, ZetaExpr, as_zeta, eval_numeric, format_fraction,
                   zeta_star_sym, zeta_sym)


@dataclass(frozen=True)
class OutputConfig:
    format: str = "pretty"
    reduce: bool = False
    numeric: int | None = None

    def context(self) -> ZetaEvalContext | None:
        return None if self.numeric is None else ZetaEvalContext(precision=self.numeric)


class InputError(DomainError):
    pass


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _text(x) -> str:
    if isinstance(x, ZetaExpr):
        return format_fraction(x.to_fraction()) if x.is_rational() else str(x)
    if isinstance(x, (int, Fraction)):
        return format_fraction(Fraction(x))
    return str(x)


def _json_value(x) -> Any:
    if isinstance(x, ZetaExpr):
        return x.to_json()
    if isinstance(x, (int, Fraction)):
        return format_fraction(Fraction(x))
    return str(x)


def _numeric_text(x, digits: int) -> str:
    return mpmath.nstr(x, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def _value_row(x, cfg: OutputConfig) -> dict:
    """coef, plus reduced and numeric renderings when requested."""
    row: dict[str, Any] = {"coef": x}
    if cfg.reduce:
        row["reduced"] = as_zeta(x).reduce_even()
    if cfg.numeric is not None:
        row["numeric"] = _numeric_text(eval_numeric(x, cfg.context()), cfg.numeric)
    return row


def _emit_rows(rows: list[dict], cfg: OutputConfig, header: dict | None, out) -> None:
    if cfg.format == "json":
        body = dict(header or {})
        body["entries"] = [{k: (v if k in ("partition", "numeric", "blocks", "type")
                                else _json_value(v)) for k, v in r.items()} for r in rows]
        out.write(json.dumps(body, sort_keys=False) + "\n")
    elif cfg.format == "csv":
        cols = list(rows[0]) if rows else []
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            writer.writerow([json.dumps(v) if isinstance(v, list) else _text(v)
                             for v in r.values()])
        out.write(buf.getvalue())
    else:
        for r in rows:
            cells = []
            for k, v in r.items():
                if isinstance(v, list):
                    cells.append(_partition_text(v))
                else:
                    cells.append(_text(v))
            out.write("  ".join(cells) + "\n")


def _partition_text(v: list) -> str:
    if v and isinstance(v[0], list):
        return str(SetPartition.from_blocks(v))
    return "(" + ",".join(map(str, v)) + ")"


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------


def _parse_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _read_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    return _parse_json(text, path)


def _set_partition(text: str) -> SetPartition:
    data = _parse_json(text, "set partition")
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise InputError(f"set partition must be a list of lists, got {text}")
    try:
        return SetPartition.from_blocks(data)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_coeffs(args, cfg: OutputConfig, out) -> int:
    g = genus.builtin_genus(args.genus)
    table = genus.coefficient_table(g, args.weight)
    rows = [{"partition": lam.to_list(), **_value_row(v, cfg)} for lam, v in table.items()]
    if cfg.format == "pretty" and cfg.reduce:
        for r in rows:
            r["coef"] = r.pop("reduced")
    _emit_rows(rows, cfg, {"genus": g.name, "weight": args.weight}, out)
    return 0


def cmd_zeta(args, cfg: OutputConfig, out) -> int:
    fn = zeta_sym if args.kind == "sym" else zeta_star_sym
    expr = fn(args.args)
    shown = expr.reduce_even() if cfg.reduce else expr
    if cfg.format == "json":
        body = {"kind": args.kind, "args": args.args, "value": shown.to_json()}
        if cfg.numeric is not None:
            body["numeric"] = _numeric_text(eval_numeric(expr, cfg.context()), cfg.numeric)
        out.write(json.dumps(body) + "\n")
    elif cfg.format == "csv":
        _emit_rows([_value_row(expr, cfg)], cfg, None, out)
    else:
        out.write(_text(shown) + "\n")
        if cfg.numeric is not None:
            out.write(_numeric_text(eval_numeric(expr, cfg.context()), cfg.numeric) + "\n")
    return 0


def cmd_mobius(args, cfg: OutputConfig, out) -> int:
    pi, rho = _set_partition(args.pi), _set_partition(args.rho)
    value = lattice.mobius(pi, rho)
    if cfg.format == "json":
        out.write(json.dumps({"pi": pi.to_list(), "rho": rho.to_list(), "mobius": value}) + "\n")
    elif cfg.format == "csv":
        out.write("pi,rho,mobius\n")
        out.write(f"\"{json.dumps(pi.to_list())}\",\"{json.dumps(rho.to_list())}\",{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


def cmd_partitions(args, cfg: OutputConfig, out) -> int:
    if args.set:
        rows = [{"blocks": p.to_list(), "type": p.type().to_list()}
                for p in lattice.iter_set_partitions(args.n)]
    else:
        if args.n < 0:
            raise DomainError("n must be non-negative")
        rows = [{"partition": lam.to_list()} for lam in partitions_of(args.n)]
    _emit_rows(rows, cfg, {"n": args.n, "count": len(rows)}, out)
    return 0


def _load_vector(path: str, cls):
    data = _read_json_file(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object with 'dim' and 'entries'")
    return cls.from_json(data)


def cmd_convert(args, cfg: OutputConfig, out) -> int:
    if args.to == "ch":
        vec = _load_vector(args.file, chern.ChernVector)
        result = chern.hk_vector_chern_to_ch(vec) if args.hk else chern.chern_to_ch(vec)
    else:
        vec = _load_vector(args.file, chern.ChVector)
        result = chern.hk_vector_ch_to_chern(vec) if args.hk else chern.ch_to_chern(vec)
    if cfg.format == "json":
        out.write(json.dumps(result.to_json()) + "\n")
    else:
        rows = [{"partition": lam.to_list(), "value": result[lam]}
                for lam in partitions_of(result.n) if lam in result.values]
        _emit_rows(rows, cfg, None, out)
    return 0


def cmd_eval(args, cfg: OutputConfig, out) -> int:
    g = genus.builtin_genus(args.genus)
    C = _load_vector(args.file, chern.ChernVector)
    value = chern.evaluate_genus(g, C, reduce=cfg.reduce)
    body: dict[str, Any] = {"genus": g.name, "dim": C.n, "value": value}
    if cfg.numeric is not None:
        body["numeric"] = _numeric_text(eval_numeric(value, cfg.context()), cfg.numeric)
    if args.hk_report:
        body["hk_report"] = chern.hk_bound_report(C)
    if cfg.format == "json":
        body["value"] = _json_value(value)
        out.write(json.dumps(body) + "\n")
    elif cfg.format == "csv":
        _emit_rows([{"genus": g.name, "dim": C.n, "value": value,
                     **({"numeric": body["numeric"]} if "numeric" in body else {})}],
                   cfg, None, out)
    else:
        out.write(_text(value) + "\n")
        if "numeric" in body:
            out.write(body["numeric"] + "\n")
        if args.hk_report:
            rep = body["hk_report"]
            out.write(f"Td^1/2 = {rep['td_half']}; 0 < value: {rep['positive']}; "
                      f"value < 1: {rep['below_one']}; applicable shape: {rep['applicable']} "
                      f"({rep['note']})\n")
    return 0


def cmd_verify(args, cfg: OutputConfig, out) -> int:
    names = list(verify.SUITES) if not args.suites or "all" in args.suites else args.suites
    unknown = [n for n in names if n not in verify.SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s) {', '.join(unknown)}; "
                          f"choose from {', '.join(verify.SUITES)} or all")
    results = verify.run(names, seed=args.seed)
    if cfg.format == "json":
        out.write(json.dumps([{"suite": n, "pass": ok, "seconds": round(t, 3), "detail": d}
                              for n, ok, t, d in results]) + "\n")
    else:
        for n, ok, t, d in results:
            line = f"{n}: {'PASS' if ok else 'FAIL'} ({t:.2f} s)"
            out.write(line + (f" {d}" if d else "") + "\n")
    return 0 if all(ok for _, ok, _, _ in results) else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv", "pretty"), default=default("pretty"))
    parser.add_argument("--reduce", action="store_true", default=default(False),
                        help="rewrite even zeta values as rational multiples of powers of pi")
    parser.add_argument("--numeric", type=int, metavar="DIGITS", default=default(None),
                        help="also print a numeric value to DIGITS digits")
    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for randomized verification suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genera",
                                     description="Exact coefficients of Chern numbers in complex genera.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_options(p, suppress=True)
        return p

    p = add("coeffs", "coefficient table of a built-in genus")
    p.add_argument("genus", choices=genus.BUILTINS)
    p.add_argument("weight", type=int)
    p.set_defaults(func=cmd_coeffs)

    p = add("zeta", "symmetrized multiple (star) zeta value via Hoffman's formulas")
    p.add_argument("kind", choices=("sym", "star"))
    p.add_argument("args", type=int, nargs="+")
    p.set_defaults(func=cmd_zeta)

    p = add("mobius", "Moebius function of the set-partition lattice")
    p.add_argument("pi")
    p.add_argument("rho")
    p.set_defaults(func=cmd_mobius)

    p = add("partitions", "integer partitions of n, or set partitions of [n] with --set")
    p.add_argument("n", type=int)
    p.add_argument("--set", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = add("convert", "convert between Chern numbers and Chern character numbers")
    p.add_argument("--to", choices=("ch", "chern"), required=True)
    p.add_argument("--hk", action="store_true",
                   help="use the even-partition formulas; odd-part entries are treated as zero")
    p.add_argument("file")
    p.set_defaults(func=cmd_convert)

    p = add("eval", "evaluate a built-in genus on Chern numbers")
    p.add_argument("genus", choices=genus.BUILTINS)
    p.add_argument("file")
    p.add_argument("--hk-report", action="store_true",
                   help="report where Td^1/2 falls relative to (0, 1)")
    p.set_defaults(func=cmd_eval)

    p = add("verify", "run self-check suites")
    p.add_argument("suites", nargs="*", metavar="SUITE")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = OutputConfig(args.format, args.reduce, args.numeric)
        if cfg.numeric is not None:
            cfg.context()
        return args.func(args, cfg, out)
    except CapabilityError as exc:
        err.write(f"error: {exc}\n")
        return 3
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
