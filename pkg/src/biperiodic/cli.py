"""Command-line front end: ``table``, ``verify``, ``genfunc`` and ``norm``.

Exit codes: 0 success, 1 identity mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .exact import format_rational, parse_rational
from .hyperseq import OW, W
from .identities import norm_T
from .scalar import ParamError, Params, SequenceEngine, lucas_params
from .series import DEFAULT_ORDER, genfunc_oct, genfunc_quat
from .suite import (
    SweepConfig,
    catalan_oct_parity_map,
    default_grid,
    gating_failures,
    run_grid,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("biperiodic")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    a: object = 1
    b: object = 1
    w0: object = 0
    w1: object = 1
    n_max: int = 20
    r_values: Optional[list[int]] = None
    order: int = DEFAULT_ORDER
    grid: Optional[list[Params]] = None
    output: str = "json"
    out_path: Optional[str] = None
    octonion: bool = False
    negative: bool = False
    workers: Optional[int] = None

    params: Params = field(init=False, default=None)

    def validate(self) -> "RunConfig":
        try:
            a, b = parse_rational(str(self.a)), parse_rational(str(self.b))
            if str(self.w0).strip().lower() == "lucas":
                self.params = lucas_params(a, b)
            else:
                self.params = Params(a, b, parse_rational(str(self.w0)), parse_rational(str(self.w1)))
        except (ValueError, ParamError) as exc:
            raise UsageError(str(exc)) from exc
        if self.n_max < 0:
            raise UsageError("n-max must be >= 0")
        if self.order < 0:
            raise UsageError("order must be >= 0")
        if self.output not in ("json", "csv"):
            raise UsageError(f"unknown output format {self.output!r}")
        return self


def parse_grid(text: str) -> list[Params]:
    """``"default"`` or ``"a,b,w0,w1; a,b,lucas; ..."``."""
    if text.strip() == "default":
        return default_grid()
    grid = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        try:
            if len(parts) == 3 and parts[2].lower() == "lucas":
                grid.append(lucas_params(parse_rational(parts[0]), parse_rational(parts[1])))
            elif len(parts) == 4:
                grid.append(Params(*map(parse_rational, parts)))
            else:
                raise UsageError(f"grid entry {chunk!r}: expected a,b,w0,w1 or a,b,lucas")
        except (ValueError, ParamError) as exc:
            raise UsageError(f"grid entry {chunk!r}: {exc}") from exc
    if not grid:
        raise UsageError("empty grid")
    return grid


def load_config_file(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class Writer:
    def __init__(self, fmt: str, stream, columns: Optional[list[str]] = None):
        self.fmt = fmt
        self.stream = stream
        self.columns = columns
        self._csv = csv.writer(stream, lineterminator="\n") if fmt == "csv" else None
        if self._csv is not None and columns:
            self._csv.writerow(columns)

    def meta(self, obj: dict) -> None:
        # headers and summaries only go into JSON output; CSV stays rectangular
        if self.fmt == "json":
            self.stream.write(dumps(obj) + "\n")

    def row(self, obj: dict, flat: Optional[list] = None) -> None:
        if self.fmt == "json":
            self.stream.write(dumps(obj) + "\n")
        else:
            self._csv.writerow(flat)


def _params_str(p: Optional[Params]) -> str:
    if p is None:
        return ""
    j = p.to_json()
    return " ".join(f"{k}={j[k]}" for k in ("a", "b", "w0", "w1"))


def cmd_table(cfg: RunConfig, stream) -> int:
    engine = SequenceEngine(cfg.params)
    start = -cfg.n_max if cfg.negative else 0
    cols = ["n", "w"] + [f"W{l}" for l in range(4)] + [f"OW{l}" for l in range(8)]
    out = Writer(cfg.output, stream, cols)
    out.meta({"header": {"command": "table", "params": cfg.params.to_json()}})
    for n in range(start, cfg.n_max + 1):
        wn, Wn, OWn = engine.w(n), W(n, engine), OW(n, engine)
        out.row(
            {"n": n, "w": format_rational(wn), "W": Wn.to_json(), "OW": OWn.to_json()},
            [n, format_rational(wn)] + Wn.to_json() + OWn.to_json(),
        )
    return EXIT_OK


def cmd_verify(cfg: RunConfig, stream) -> int:
    grid = cfg.grid if cfg.grid is not None else default_grid()
    sweep = SweepConfig(
        n_max=cfg.n_max,
        r_values=tuple(cfg.r_values) if cfg.r_values is not None else None,
    )
    cols = ["identity", "params", "indices", "equal", "hypothesis", "note"]
    out = Writer(cfg.output, stream, cols)
    out.meta({"header": {"command": "verify", "grid": [p.to_json() for p in grid], "n_max": cfg.n_max}})
    reports = run_grid(grid, sweep, cfg.workers)
    for rep in reports:
        idx = " ".join(f"{k}={v}" for k, v in sorted(rep.indices.items()))
        out.row(
            rep.to_json(),
            [rep.name, _params_str(rep.params), idx, rep.equal, rep.hypothesis, rep.note or ""],
        )
    failures = gating_failures(reports)
    summary = {
        "checks": len(reports),
        "gating_failures": len(failures),
        "exploratory_unequal": sum(1 for r in reports if not r.hypothesis and not r.equal),
        "catalan_oct_parity": catalan_oct_parity_map(reports),
    }
    out.meta({"summary": summary})
    log.info("verify: %d checks, %d gating failures", len(reports), len(failures))
    for rep in failures[:20]:
        log.error("mismatch: %s %s %s %s", rep.name, _params_str(rep.params), rep.indices, rep.note or "")
    return EXIT_OK if not failures else EXIT_MISMATCH


def cmd_genfunc(cfg: RunConfig, stream) -> int:
    engine = SequenceEngine(cfg.params)
    gen, ref = (genfunc_oct, OW) if cfg.octonion else (genfunc_quat, W)
    dim = 8 if cfg.octonion else 4
    cols = ["degree"] + [f"c{l}" for l in range(dim)] + ["match"]
    out = Writer(cfg.output, stream, cols)
    out.meta({"header": {"command": "genfunc", "params": cfg.params.to_json(),
                         "algebra": "octonion" if cfg.octonion else "quaternion"}})
    ok = True
    for k, c in enumerate(gen(cfg.params, cfg.order)):
        match = c == ref(k, engine)
        ok &= match
        out.row({"degree": k, "coefficient": c.to_json(), "match": match}, [k] + c.to_json() + [match])
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_norm(cfg: RunConfig, stream) -> int:
    engine = SequenceEngine(cfg.params)
    out = Writer(cfg.output, stream, ["n", "norm", "closed_form", "equal"])
    out.meta({"header": {"command": "norm", "params": cfg.params.to_json()}})
    ok = True
    for n in range(cfg.n_max + 1):
        lhs = W(n, engine).norm()
        rhs = norm_T(n, cfg.params) + norm_T(n + 1, cfg.params)
        equal = rhs.is_rational() and rhs.x == lhs
        ok &= equal
        out.row(
            {"n": n, "norm": format_rational(lhs), "closed_form": str(rhs), "equal": equal},
            [n, format_rational(lhs), str(rhs), equal],
        )
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "genfunc": cmd_genfunc, "norm": cmd_norm}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file; command-line flags win")
    common.add_argument("--a", help="recurrence coefficient at even steps (p or p/q)")
    common.add_argument("--b", help="recurrence coefficient at odd steps (p or p/q)")
    common.add_argument("--w0", help="initial value w0, or 'lucas' for the Lucas seeds")
    common.add_argument("--w1", help="initial value w1")
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--output", choices=["json", "csv"])
    common.add_argument("--out", dest="out_path", help="write to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="biperiodic",
        description="Exact bi-periodic Fibonacci quaternions/octonions and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("table", parents=[common], help="print w_n, W_n and OW_n")
    p.add_argument("--negative", action="store_true", default=None, help="also print n < 0")
    p = sub.add_parser("verify", parents=[common], help="run the identity suite over a grid")
    p.add_argument("--r", dest="r_values", help="comma-separated r values for Catalan checks")
    p.add_argument("--grid", help="'default' or 'a,b,w0,w1; a,b,lucas; ...'")
    p.add_argument("--workers", type=int, help="process pool size (default from BIPERIODIC_WORKERS)")
    p = sub.add_parser("genfunc", parents=[common], help="expand the generating function")
    p.add_argument("--order", type=int)
    p.add_argument("--octonion", action="store_true", default=None)
    sub.add_parser("norm", parents=[common], help="norm values against the closed form")
    return parser


def _merge(args: argparse.Namespace) -> RunConfig:
    values = load_config_file(args.config) if getattr(args, "config", None) else {}
    for key, value in vars(args).items():
        if key in ("config", "command", "verbose") or value is None:
            continue
        values[key] = value
    cfg = RunConfig()
    known = set(RunConfig.__dataclass_fields__) - {"params"}
    for key, value in values.items():
        if key not in known:
            raise UsageError(f"unknown setting {key!r}")
        try:
            if key in ("n_max", "order", "workers"):
                value = int(value)
            elif key == "r_values" and isinstance(value, str):
                value = [int(x) for x in value.split(",") if x.strip()]
            elif key == "grid" and isinstance(value, str):
                value = parse_grid(value)
            elif key in ("octonion", "negative") and isinstance(value, str):
                value = value.strip().lower() in ("1", "true", "yes", "on")
        except ValueError as exc:
            raise UsageError(f"bad value for {key}: {exc}") from exc
        setattr(cfg, key, value)
    return cfg.validate()


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = _merge(args)
    except UsageError as exc:
        print(f"biperiodic {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out_path:
        with open(cfg.out_path, "w", newline="") as fh:
            return COMMANDS[args.command](cfg, fh)
    return COMMANDS[args.command](cfg, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
