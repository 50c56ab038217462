"""Exhaustive checks of the linearity propositions, the two fractal theorems
and the digit/geometry oracle equivalences.

Every search space is enumerated lexicographically, so counterexample lists
come out in the same order run to run.  ``jobs > 1`` splits the outer
enumeration index across worker processes.  Partial results are merged by
addition and a sorted merge of counterexamples, so totals do not depend on
scheduling.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import _kernels as K
from . import tables
from .errors import ResourceLimitError
from .fractal import (
    Point,
    digit_member_sierpinski,
    digit_member_snowflake,
    sierpinski_member,
    snowflake_member,
)

__all__ = [
    "PROPERTIES",
    "VerificationReport",
    "verify_lemma_oracles",
    "verify_prop_sum2",
    "verify_prop_sum3",
    "verify_theorem_main",
    "verify_theorem_snowflake",
]

MAX_COUNTEREXAMPLES = 64
DEFAULT_EXTRA_DEPTH = 2


@dataclass
class VerificationReport:
    prop: str
    space: str
    checked: int
    violations: list = field(default_factory=list)
    violation_count: int = 0
    millis: int = 0
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def lines(self) -> list[str]:
        out = [
            f"property: {self.prop}",
            f"space: {self.space}",
            f"checked: {self.checked}",
            f"violations: {self.violation_count}",
        ]
        out += [f"{k}: {v}" for k, v in self.counts.items()]
        out += [f"counterexample: {' '.join(map(str, v))}" for v in self.violations]
        out += [f"millis: {self.millis}", f"result: {'PASS' if self.passed else 'FAIL'}"]
        return out

    def summary(self) -> dict:
        return {
            "property": self.prop,
            "space": self.space,
            "checked": self.checked,
            "violations": self.violation_count,
            "counterexamples": [list(map(str, v)) for v in self.violations],
            "counts": dict(self.counts),
            "millis": self.millis,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True)


def _guard(name: str, n: int, limit: int) -> None:
    if n < 0:
        raise ValueError(f"{name}: length must be >= 0")
    if n > limit:
        raise ResourceLimitError(f"{name}: length {n} exceeds the limit {limit}")


def _run(worker: Callable, total: int, jobs: int, *args):
    """Run ``worker(lo, hi, *args)`` over ``range(total)`` split into ``jobs`` pieces.

    Each worker returns ``(counts, violation_count, violations)``.
    """
    jobs = max(1, min(jobs, total or 1))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    spans = [(bounds[i], bounds[i + 1]) for i in range(jobs)]
    if jobs == 1:
        parts = [worker(lo, hi, *args) for lo, hi in spans]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(worker, lo, hi, *args) for lo, hi in spans]
            parts = [f.result() for f in futures]
    counts: dict = {}
    nviol = 0
    viol: list = []
    for c, nv, v in parts:
        for key, val in c.items():
            counts[key] = counts.get(key, 0) + val
        nviol += nv
        viol.extend(v)
    viol.sort()
    return counts, nviol, viol[:MAX_COUNTEREXAMPLES]


def _digits(base: int, n: int, i: int) -> str:
    return str(tables.row_vector(base, n, i))


# --- linearity propositions --------------------------------------------------


def _sum2_worker(lo, hi, n):
    S = tables.scaled_sigmas(2, n)
    linear, nviol, viol = K.sum2_sweep(S, lo, hi, MAX_COUNTEREXAMPLES)
    rows = [(int(i), int(k)) for i, k in viol]
    return {"linear_pairs": linear}, nviol, rows


def verify_prop_sum2(max_len: int, jobs: int = 1) -> VerificationReport:
    """Linear over Z2 iff the agreement vector is empty, for all pairs up to ``max_len``."""
    _guard("sum2", max_len, 12)
    t0 = time.perf_counter()
    m = 2**max_len
    counts, nviol, viol = _run(_sum2_worker, m, jobs, max_len)
    return VerificationReport(
        "sum2",
        f"all Z2 vector pairs supported in 1..{max_len} ({m}x{m})",
        m * m,
        [(_digits(2, max_len, i), _digits(2, max_len, k)) for i, k in viol],
        nviol,
        round((time.perf_counter() - t0) * 1000),
        counts,
    )


def _sum3_worker(lo, hi, n):
    D = tables.digit_table(3, n)
    S = tables.scaled_sigmas(3, n)
    _, W = tables.sigma_weights(n)
    stats, viol = K.sum3_sweep(D, S, W, lo, hi, MAX_COUNTEREXAMPLES)
    keys = ("checked", "linear_pairs", "z_empty_pairs", "violations_a", "violations_b",
            "converse_probe_hits", "sigma_z_zero_nonempty")
    counts = dict(zip(keys, stats))
    counts.pop("checked")
    rows = [(int(i), int(k), "a" if kind == 1 else "b") for i, k, kind in viol]
    return counts, stats[3] + stats[4], rows


def verify_prop_sum3(max_len: int, jobs: int = 1) -> VerificationReport:
    """Part (a): empty z implies linear.  Part (b): linear implies sigma(h(z)) == 0.

    ``converse_probe_hits`` counts pairs with nonempty z, sigma(h(z)) == 0
    and no linearity.  It is reported, not asserted.
    """
    _guard("sum3", max_len, 8)
    t0 = time.perf_counter()
    m = 3**max_len
    counts, nviol, viol = _run(_sum3_worker, m, jobs, max_len)
    return VerificationReport(
        "sum3",
        f"all Z3 vector pairs supported in 1..{max_len} ({m}x{m})",
        m * m,
        [(_digits(3, max_len, i), _digits(3, max_len, k), part) for i, k, part in viol],
        nviol,
        round((time.perf_counter() - t0) * 1000),
        counts,
    )


# --- fractal theorems ----------------------------------------------------------


def _thm_main_worker(lo, hi, n, depth):
    S = tables.scaled_sigmas(2, n)
    vals = tables.scaled_values(2, n)
    den = 2**n
    pairs = K.linear_pairs2(S)
    lin = {(int(i), int(k)) for i, k in pairs}
    checked = members = 0
    control = 0
    viol = []
    for i in range(lo, hi):
        x = tables.row_vector(2, n, i)
        px = Fraction(int(vals[i]), den)
        for k in range(2**n):
            if (i, k) in lin:
                checked += 1
                p = Point(px, Fraction(int(vals[k]), den))
                if sierpinski_member(p, depth).member:
                    members += 1
                else:
                    viol.append((i, k, "not-member"))
            else:
                # negative control: a non-linear pair must fail the plain digit test
                control += 1
                if digit_member_sierpinski(x, tables.row_vector(2, n, k), False):
                    viol.append((i, k, "control"))
    counts = {"linear_points": checked, "members": members, "control_pairs": control}
    return counts, len(viol), viol[:MAX_COUNTEREXAMPLES]


def verify_theorem_main(
    max_len: int, extra_depth: int = DEFAULT_EXTRA_DEPTH, jobs: int = 1
) -> VerificationReport:
    """Every Z2-linear pair maps to a point of the Sierpinski approximant at depth N + d."""
    _guard("thm1", max_len, 10)
    t0 = time.perf_counter()
    depth = max_len + extra_depth
    counts, nviol, viol = _run(_thm_main_worker, 2**max_len, jobs, max_len, depth)
    return VerificationReport(
        "thm1",
        f"Z2-linear pairs supported in 1..{max_len}, Sierpinski depth {depth}",
        counts.get("linear_points", 0),
        [(_digits(2, max_len, i), _digits(2, max_len, k), why) for i, k, why in viol],
        nviol,
        round((time.perf_counter() - t0) * 1000),
        counts,
    )


def _thm_snow_worker(lo, hi, n, depth):
    D = tables.digit_table(3, n)
    S = tables.scaled_sigmas(3, n)
    _, W = tables.sigma_weights(n)
    vals = tables.scaled_values(3, n)
    den = 3**n
    pairs = K.zempty_pairs3(D, S, W)
    checked = members = 0
    viol = []
    for i, k in pairs:
        if not lo <= i < hi:
            continue
        checked += 1
        p = Point(Fraction(int(vals[i]), den), Fraction(int(vals[k]), den))
        if snowflake_member(p, depth).member:
            members += 1
        else:
            viol.append((int(i), int(k)))
    counts = {"z_empty_points": checked, "members": members}
    return counts, len(viol), viol[:MAX_COUNTEREXAMPLES]


def verify_theorem_snowflake(
    max_len: int, extra_depth: int = DEFAULT_EXTRA_DEPTH, jobs: int = 1
) -> VerificationReport:
    """Every Z3 pair with empty agreement vector maps into the snowflake approximant."""
    _guard("thm2", max_len, 6)
    t0 = time.perf_counter()
    depth = max_len + extra_depth
    counts, nviol, viol = _run(_thm_snow_worker, 3**max_len, jobs, max_len, depth)
    return VerificationReport(
        "thm2",
        f"Z3 pairs with empty z supported in 1..{max_len}, snowflake depth {depth}",
        counts.get("z_empty_points", 0),
        [(_digits(3, max_len, i), _digits(3, max_len, k)) for i, k in viol],
        nviol,
        round((time.perf_counter() - t0) * 1000),
        counts,
    )


# --- oracle equivalence ----------------------------------------------------------


def _lemma_worker(lo, hi, base, n):
    vals = tables.scaled_values(base, n)
    den = base**n
    m = base**n
    if base == 2:
        digit_test, geo = digit_member_sierpinski, sierpinski_member
    else:
        digit_test, geo = digit_member_snowflake, snowflake_member
    vecs = [tables.row_vector(base, n, k) for k in range(m)]
    both = neither = 0
    viol = []
    for i in range(lo, hi):
        px = Fraction(int(vals[i]), den)
        for k in range(m):
            by_digits = digit_test(vecs[i], vecs[k], True)
            by_geometry = geo(Point(px, Fraction(int(vals[k]), den)), n).member
            if by_digits != by_geometry:
                viol.append((i, k, f"digits={by_digits} geometry={by_geometry}"))
            elif by_digits:
                both += 1
            else:
                neither += 1
    counts = {f"base{base}_both_member": both, f"base{base}_both_nonmember": neither}
    return counts, len(viol), viol[:MAX_COUNTEREXAMPLES]


def verify_lemma_oracles(max_len: int = 8, max_len3: int = 5, jobs: int = 1) -> VerificationReport:
    """Digit membership with dual tails agrees with geometric membership at depth L."""
    _guard("lemmas (base 2)", max_len, 8)
    _guard("lemmas (base 3)", max_len3, 5)
    t0 = time.perf_counter()
    c2, n2, v2 = _run(_lemma_worker, 2**max_len, jobs, 2, max_len)
    c3, n3, v3 = _run(_lemma_worker, 3**max_len3, jobs, 3, max_len3)
    viol = [("base2", _digits(2, max_len, i), _digits(2, max_len, k), why) for i, k, why in v2]
    viol += [("base3", _digits(3, max_len3, i), _digits(3, max_len3, k), why) for i, k, why in v3]
    return VerificationReport(
        "lemmas",
        f"Z2 pairs in 1..{max_len} vs S_{max_len}; Z3 pairs in 1..{max_len3} vs G_{max_len3}",
        4**max_len + 9**max_len3,
        viol[:MAX_COUNTEREXAMPLES],
        n2 + n3,
        round((time.perf_counter() - t0) * 1000),
        {**c2, **c3},
    )


PROPERTIES = {
    "sum2": verify_prop_sum2,
    "sum3": verify_prop_sum3,
    "thm1": verify_theorem_main,
    "thm2": verify_theorem_snowflake,
    "lemmas": verify_lemma_oracles,
}
