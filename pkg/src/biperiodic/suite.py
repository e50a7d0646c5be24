"""Verification sweeps over parameter grids.

:func:`verify_point` runs every check for one parameter set and returns a list
of :class:`~biperiodic.identities.IdentityReport`; :func:`run_grid` fans grid
points out to a process pool and puts the results back in grid order.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .hypercomplex import (
    OCTONION_TABLE_LITERAL,
    QUATERNION_RULES,
    MultiplicationTable,
    Octonion,
    Quaternion,
    hc_mul,
)
from .hyperseq import OW, W, OW_binet, W_binet
from .identities import (
    IdentityReport,
    _report,
    cassini_even,
    cassini_quat,
    catalan_oct,
    catalan_quat,
    matrix_rep,
    mixed_relation_oct,
    mixed_relation_quat,
    norm_formula,
    sums_oct,
    sums_quat,
)
from .scalar import Params, SequenceEngine, lucas_params, w_binet
from .series import genfunc_oct, genfunc_quat

log = logging.getLogger(__name__)

WORKERS_ENV = "BIPERIODIC_WORKERS"

DEFAULT_AB = ((1, 1), (2, 1), (1, 2), (2, 3), (1, -3), (Fraction(1, 2), 3))
DEFAULT_SEEDS = ((0, 1), "lucas", (1, 1), (1, 4))


def default_grid() -> list[Params]:
    """Every (a, b) pair crossed with the four seed choices, in a fixed order."""
    grid = []
    for a, b in DEFAULT_AB:
        for seed in DEFAULT_SEEDS:
            grid.append(lucas_params(a, b) if seed == "lucas" else Params(a, b, *seed))
    return grid


def _guard(name: str, params: Optional[Params], indices: dict, fn: Callable[[], IdentityReport]):
    """Run one check; arithmetic failures become failed reports instead of crashes."""
    try:
        return fn()
    except ArithmeticError as exc:
        rep = IdentityReport(name, params, indices, None, None, False, True, f"error: {exc}")
        return rep


def algebra_reports() -> list[IdentityReport]:
    """Live multiplication tables against the embedded reference data."""
    reports = []
    ref_oct = MultiplicationTable.from_literal(OCTONION_TABLE_LITERAL)
    ref_quat = MultiplicationTable.from_rules(QUATERNION_RULES)
    for name, cls, ref in (
        ("table_quaternion", Quaternion, ref_quat),
        ("table_octonion", Octonion, ref_oct),
    ):
        live = cls.table
        for i in range(cls.dim):
            for j in range(cls.dim):
                lhs = hc_mul(cls.basis(i, Fraction(1), Fraction(0)), cls.basis(j, Fraction(1), Fraction(0)))
                s, k = ref.product(i, j)
                rhs = cls.basis(k, Fraction(s), Fraction(0))
                reports.append(_report(name, None, {"i": i, "j": j}, lhs, rhs))
        problems = live.check_structure()
        reports.append(
            IdentityReport(f"{name}_structure", None, {}, len(problems), 0, not problems, True,
                           "; ".join(problems) or None)
        )
    return reports


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 20
    r_values: Optional[tuple[int, ...]] = None
    order: Optional[int] = None


def verify_point(params: Params, config: SweepConfig = SweepConfig()) -> list[IdentityReport]:
    n_max = config.n_max
    engine = SequenceEngine(params)
    out: list[IdentityReport] = []
    add = out.append

    def guarded(name, idx, fn):
        add(_guard(name, params, idx, fn))

    for n in range(n_max + 1):
        guarded("binet_scalar", {"n": n},
                lambda n=n: _report("binet_scalar", params, {"n": n}, engine.w(n), w_binet(n, params)))
        guarded("binet_quat", {"n": n},
                lambda n=n: _report("binet_quat", params, {"n": n}, W(n, engine), W_binet(n, params)))
        guarded("binet_oct", {"n": n},
                lambda n=n: _report("binet_oct", params, {"n": n}, OW(n, engine), OW_binet(n, params)))

    order = config.order if config.order is not None else n_max
    for name, gen, ref in (("genfunc_quat", genfunc_quat, W), ("genfunc_oct", genfunc_oct, OW)):
        try:
            coeffs = gen(params, order)
        except ArithmeticError as exc:
            add(IdentityReport(name, params, {}, None, None, False, True, f"error: {exc}"))
            continue
        for n, c in enumerate(coeffs):
            add(_report(name, params, {"n": n}, c, ref(n, engine)))

    for n in range(n_max + 1):
        rs = config.r_values if config.r_values is not None else range(0, n + 1, 2)
        for r in rs:
            if r % 2 == 0 and 0 <= r <= n:
                guarded("catalan_quat", {"n": n, "r": r}, lambda n=n, r=r: catalan_quat(n, r, params, engine))
        for r in range(n + 1):
            guarded("catalan_oct", {"n": n, "r": r}, lambda n=n, r=r: catalan_oct(n, r, params, engine))
        guarded("cassini_quat", {"n": n}, lambda n=n: cassini_quat(n, params, engine))
        guarded("mixed_relation_quat", {"n": n}, lambda n=n: mixed_relation_quat(n, params, engine))
        guarded("mixed_relation_oct", {"n": n}, lambda n=n: mixed_relation_oct(n, params, engine))
        guarded("norm_formula", {"n": n}, lambda n=n: norm_formula(n, params, engine))
        if n >= 1:
            guarded("matrix_rep", {"n": n}, lambda n=n: matrix_rep(n, params, engine))
            guarded("cassini_even", {"n": n}, lambda n=n: cassini_even(n, params, engine))
            for fn in (sums_quat, sums_oct):
                try:
                    out.extend(fn(n, params, engine))
                except ArithmeticError as exc:
                    add(IdentityReport(fn.__name__, params, {"n": n}, None, None, False, True, f"error: {exc}"))
    return out


def _verify_indexed(args):
    index, params, config = args
    return index, verify_point(params, config)


def worker_count(default: int = 1) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring non-integer %s=%r", WORKERS_ENV, raw)
        return default


def run_grid(
    grid: Sequence[Params], config: SweepConfig = SweepConfig(), workers: Optional[int] = None
) -> list[IdentityReport]:
    """Algebra checks followed by every grid point's reports, in grid order."""
    workers = worker_count() if workers is None else workers
    jobs = [(i, p, config) for i, p in enumerate(grid)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_indexed, jobs))
    else:
        results = [_verify_indexed(job) for job in jobs]
    results.sort(key=lambda item: item[0])
    reports = algebra_reports()
    for _, reps in results:
        reports.extend(reps)
    return reports


def gating_failures(reports: Sequence[IdentityReport]) -> list[IdentityReport]:
    """Failed checks whose inputs satisfy the stated hypotheses."""
    return [r for r in reports if r.hypothesis and not r.equal]


def parity_key(rep: IdentityReport) -> tuple[str, str]:
    n, r = rep.indices["n"], rep.indices["r"]
    return ("even" if n % 2 == 0 else "odd", "even" if r % 2 == 0 else "odd")


def catalan_oct_parity_map(reports: Sequence[IdentityReport]) -> dict:
    """Equal/unequal counts of the octonion Catalan checks by (n parity, r parity)."""
    table: dict = {}
    for rep in reports:
        if rep.name != "catalan_oct":
            continue
        n_par, r_par = parity_key(rep)
        key = f"n_{n_par}/r_{r_par}"
        cell = table.setdefault(key, {"equal": 0, "unequal": 0})
        cell["equal" if rep.equal else "unequal"] += 1
    return dict(sorted(table.items()))
