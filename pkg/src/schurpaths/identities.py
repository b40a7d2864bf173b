"""Executable identity checks, each producing a structured CheckReport.

Every verifier computes its two sides through disjoint code paths: tableau
sums live in `combinat`, determinants and quotients in `symfun`, and path
dynamic programming / brute-force path systems in `lgv`; the only shared
layer is the exact polynomial ring.  A verifier that fed one side into the
other would be vacuous, so the dependency direction is part of the design.

On top of the symbolic comparison, every successful check re-evaluates both
sides at random integer points as a guard against canonicalization bugs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from . import combinat, lgv, symfun
from .combinat import partition, partition_text
from .lgv import Point, TooLarge
from .ring import (
    Family,
    IndexUnderflow,
    Monomial,
    Polynomial,
    canonical_text,
    eval_int,
    substitute_family,
    substitute_zero,
    tpoly,
    xpoly,
    ypoly,
)

VERIFIED = "VERIFIED"
MISMATCH = "MISMATCH"
ERROR = "ERROR"

_EVAL_POINTS = 10
_EVAL_SEED = 20240915
_MAX_DIFFERING_TERMS = 50
_PARTITION_LIST_LIMIT = 20000

IDENTITY_NAMES = (
    "main-lemma",
    "corollary",
    "vandermonde",
    "jacobi-trudi",
    "bialternant",
    "cauchy",
    "dual-cauchy",
    "dual-determinant",
    "factorial-schur",
    "newton",
)


@dataclass
class CheckReport:
    """Outcome of one identity check."""

    identity: str
    params: dict[str, str]
    status: str
    lhs_text: str | None = None
    rhs_text: str | None = None
    elapsed_ms: int = 0

    def to_json_dict(self) -> dict:
        out: dict = {"identity": self.identity, "params": dict(self.params), "status": self.status}
        if self.lhs_text is not None:
            out["lhs"] = self.lhs_text
        if self.rhs_text is not None:
            out["rhs"] = self.rhs_text
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def summary_line(self) -> str:
        inner = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.identity} [{inner}]: {self.status}"


def _mismatch_texts(lhs: Polynomial, rhs: Polynomial) -> tuple[str, str]:
    """Canonical texts restricted to the first 50 differing monomials."""
    difference = lhs - rhs
    differing = sorted(
        (m for m, _ in difference.items()), key=Monomial.sort_key, reverse=True
    )[:_MAX_DIFFERING_TERMS]
    keep = set(differing)
    lhs_cut = Polynomial({m: c for m, c in lhs.items() if m in keep})
    rhs_cut = Polynomial({m: c for m, c in rhs.items() if m in keep})
    return canonical_text(lhs_cut), canonical_text(rhs_cut)


def _eval_crosscheck(lhs: Polynomial, rhs: Polynomial, rng: random.Random) -> None:
    variables = lhs.variables() | rhs.variables()
    for _ in range(_EVAL_POINTS):
        assignment = {v: rng.randint(-9, 9) for v in variables}
        if eval_int(lhs, assignment) != eval_int(rhs, assignment):
            raise RuntimeError("symbolically equal polynomials evaluated differently")


class _Checker:
    """Accumulates equality checks; remembers the first failure."""

    def __init__(self) -> None:
        self.rng = random.Random(_EVAL_SEED)
        self.failure: tuple[dict[str, str], Polynomial, Polynomial] | None = None

    def ok(self) -> bool:
        return self.failure is None

    def eq(self, lhs: Polynomial, rhs: Polynomial, **where: object) -> bool:
        if self.failure is not None:
            return False
        if lhs != rhs:
            self.failure = ({k: str(v) for k, v in where.items()}, lhs, rhs)
            return False
        _eval_crosscheck(lhs, rhs, self.rng)
        return True


def _finish(identity: str, params: dict[str, str], checker: _Checker, t0: float) -> CheckReport:
    elapsed = int((time.perf_counter() - t0) * 1000)
    if checker.ok():
        return CheckReport(identity, params, VERIFIED, elapsed_ms=elapsed)
    where, lhs, rhs = checker.failure
    lhs_text, rhs_text = _mismatch_texts(lhs, rhs)
    return CheckReport(
        identity,
        {**params, **where},
        MISMATCH,
        lhs_text=lhs_text,
        rhs_text=rhs_text,
        elapsed_ms=elapsed,
    )


def _to_y(p: Polynomial) -> Polynomial:
    return substitute_family(p, Family.X, Family.Y, 0)


def _xy_component(p: Polynomial, d: int) -> Polynomial:
    """The part of p with x-degree d and y-degree d."""
    return Polynomial(
        {
            m: c
            for m, c in p.items()
            if m.family_degree(Family.X) == d and m.family_degree(Family.Y) == d
        }
    )


def _lgv_affordable(shape: Sequence[int], n: int) -> bool:
    # brute-force path systems stay cheap in this range
    return sum(shape) <= 4 and n <= 3


# -- individual verifiers ----------------------------------------------------


def verify_main_lemma(m_max: int = 6, n_max: int = 6, corrupt_weights: bool = False) -> CheckReport:
    """Path-weight DP against the closed product form over a full (m, n) grid."""
    t0 = time.perf_counter()
    checker = _Checker()
    scheme = lgv.schur_weighted_scheme(
        n=n_max, col_bound=m_max, truncated=False, corrupt_weights=corrupt_weights
    )
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            if not checker.eq(
                lgv.e_weight(scheme, Point(1, 1), Point(m, n)),
                lgv.lemma_product(m, n),
                m=m,
                n=n,
            ):
                break
        if not checker.ok():
            break
    return _finish(
        "main-lemma", {"m_max": str(m_max), "n_max": str(n_max)}, checker, t0
    )


def verify_corollary(n_max: int = 4, m_max: int = 5) -> CheckReport:
    """Truncated path-weight DP equals x_t^(m-1) for all 1 <= t < n <= n_max."""
    t0 = time.perf_counter()
    checker = _Checker()
    for n in range(2, n_max + 1):
        scheme = lgv.schur_weighted_scheme(n=n, col_bound=m_max, truncated=True)
        for t in range(1, n):
            for m in range(1, m_max + 1):
                checker.eq(
                    lgv.e_weight(scheme, Point(1, t), Point(m, n)),
                    lgv.corollary_power(t, m, n),
                    t=t,
                    m=m,
                    n=n,
                )
    return _finish(
        "corollary", {"n_max": str(n_max), "m_max": str(m_max)}, checker, t0
    )


def verify_vandermonde(n: int, brute_force: bool | None = None) -> CheckReport:
    """Product form vs determinant of powers vs (optionally) brute-force LGV sum."""
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("vandermonde check needs n >= 1")
    brute = (n <= 3) if brute_force is None else brute_force
    checker = _Checker()
    product = symfun.vandermonde(n)
    scheme = lgv.vandermonde_scheme(n)
    sources, sinks = lgv.vandermonde_endpoints(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            checker.eq(
                lgv.e_weight(scheme, sources[i - 1], sinks[j - 1]),
                xpoly(i) ** (n - j),
                entry=f"({i},{j})",
            )
    checker.eq(symfun.alternant((), n), product, side="alternant-vs-product")
    checker.eq(lgv.lgv_det(scheme, sources, sinks), product, side="lgv-det-vs-product")
    params = {"n": str(n), "brute_force": str(brute).lower()}
    if brute:
        systems = list(lgv.nonintersecting_systems(scheme, sources, sinks))
        params["systems"] = str(len(systems))
        checker.eq(
            Polynomial.const(len(systems)), Polynomial.const(1), side="unique-system-count"
        )
        signed = Polynomial.zero()
        for system in systems:
            signed = signed + system.sign * lgv.system_weight(scheme, system)
        checker.eq(signed, product, side="signed-sum-vs-product")
    return _finish("vandermonde", params, checker, t0)


def _flipped_jacobi_trudi(shape: Sequence[int], n: int) -> Polynomial:
    """The printed-orientation determinant det(h_{lambda_i + i - j}).

    Kept as a negative control: it already fails against the tableau sum at
    shape (2,1).
    """
    shape = partition(shape)
    r = len(shape)
    if r == 0:
        return Polynomial.one()
    matrix = symfun.PolyMatrix.from_rows(
        [
            [symfun.complete_homogeneous(shape[i] + i - j, n) for j in range(r)]
            for i in range(r)
        ]
    )
    return symfun.det(matrix)


def verify_jacobi_trudi(
    shape: Sequence[int], n: int, flip_orientation: bool = False
) -> CheckReport:
    """Determinant of complete homogeneous polynomials vs the tableau sum."""
    t0 = time.perf_counter()
    shape = partition(shape)
    checker = _Checker()
    tableaux_side = combinat.schur_tableaux(shape, n)
    det_side = (
        _flipped_jacobi_trudi(shape, n) if flip_orientation else symfun.jacobi_trudi(shape, n)
    )
    checker.eq(det_side, tableaux_side, side="determinant-vs-tableaux")
    if _lgv_affordable(shape, n):
        checker.eq(lgv.schur_via_lgv(shape, n), tableaux_side, side="lgv-vs-tableaux")
    return _finish(
        "jacobi-trudi", {"shape": partition_text(shape), "n": str(n)}, checker, t0
    )


def verify_bialternant(shape: Sequence[int], n: int) -> CheckReport:
    """The full reduction chain from path systems to the alternant quotient."""
    t0 = time.perf_counter()
    shape = partition(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    checker = _Checker()
    padded = shape + (0,) * (n - len(shape))
    width = (shape[0] if shape else 0) + n
    scheme = lgv.schur_weighted_scheme(n=n, col_bound=width, truncated=True)
    double_primed, primed, sinks = lgv.bialternant_endpoints(shape, n)
    tableaux_side = combinat.schur_tableaux(shape, n)

    det_primed = lgv.lgv_det(scheme, primed, sinks)
    checker.eq(det_primed, tableaux_side, step="primed-det-vs-tableaux")
    if _lgv_affordable(shape, n):
        checker.eq(lgv.schur_via_lgv(shape, n), det_primed, step="lgv-sum-vs-primed-det")

    det_mixed = lgv.lgv_det(scheme, double_primed, sinks)
    det_change = lgv.lgv_det(scheme, double_primed, primed)
    checker.eq(det_mixed, det_change * det_primed, step="determinant-factorization")
    checker.eq(det_change, symfun.vandermonde(n), step="change-det-vs-vandermonde")

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            checker.eq(
                lgv.e_weight(scheme, double_primed[n - i], sinks[n - j]),
                xpoly(i) ** (padded[j - 1] + n - j),
                step="power-entry",
                entry=f"({i},{j})",
            )
    checker.eq(det_mixed, symfun.alternant(shape, n), step="mixed-det-vs-alternant")
    checker.eq(symfun.bialternant(shape, n), tableaux_side, step="quotient-vs-tableaux")
    return _finish(
        "bialternant", {"shape": partition_text(shape), "n": str(n)}, checker, t0
    )


def verify_cauchy(n: int, degree_cap: int) -> CheckReport:
    """Degree-graded Cauchy identity on the doubled graph.

    Compares the (d, d)-bidegree components of det(e(a_i, b_j)) and of
    Vdm(x) * Vdm(y) * sum of S_lambda(x) S_lambda(y) for every d up to
    degree_cap minus the Vandermonde offset n(n-1)/2.
    """
    t0 = time.perf_counter()
    if n < 1 or degree_cap < 0:
        raise ValueError("cauchy check needs n >= 1 and degree_cap >= 0")
    if comb(n + degree_cap, n) > _PARTITION_LIST_LIMIT:
        raise TooLarge("the truncated partition list would explode")
    checker = _Checker()
    scheme = lgv.cauchy_doubled_scheme(n, 2 * degree_cap)
    sources, sinks = lgv.cauchy_endpoints(n)
    entries = [[lgv.e_weight(scheme, a, b) for b in sinks] for a in sources]
    for i in range(n):
        for j in range(n):
            geometric = Polynomial.zero()
            for k in range(degree_cap + 1):
                geometric = geometric + (xpoly(i + 1) * ypoly(j + 1)) ** k
            checker.eq(entries[i][j], geometric, step="entry-vs-geometric", entry=f"({i + 1},{j + 1})")
    lhs = symfun.det(symfun.PolyMatrix.from_rows(entries))
    vdm_x = symfun.vandermonde(n)
    vdm_y = _to_y(vdm_x)
    series = Polynomial.zero()
    for shape in combinat.partitions_in_box(n, degree_cap):
        if sum(shape) > degree_cap:
            continue
        s_x = combinat.schur_tableaux(shape, n)
        series = series + s_x * _to_y(s_x)
    rhs = vdm_x * vdm_y * series
    offset = n * (n - 1) // 2
    for d in range(0, degree_cap - offset + 1):
        checker.eq(_xy_component(lhs, d), _xy_component(rhs, d), step="graded-component", d=d)
    return _finish(
        "cauchy", {"n": str(n), "degree_cap": str(degree_cap)}, checker, t0
    )


def verify_dual_cauchy(n: int, m: int) -> CheckReport:
    """Product of (1 + x_i y_j) vs the conjugate-paired Schur expansion."""
    t0 = time.perf_counter()
    if n < 1 or m < 1:
        raise ValueError("dual cauchy needs n, m >= 1")
    checker = _Checker()
    lhs = Polynomial.one()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            lhs = lhs * (Polynomial.one() + xpoly(i) * ypoly(j))
    rhs = Polynomial.zero()
    box = combinat.partitions_in_box(n, m)
    for shape in box:
        rhs = rhs + combinat.schur_tableaux(shape, n) * _to_y(
            combinat.schur_tableaux(combinat.conjugate(shape), m)
        )
    checker.eq(lhs, rhs, side="product-vs-schur-sum")
    return _finish(
        "dual-cauchy",
        {"n": str(n), "m": str(m), "partitions": str(len(box))},
        checker,
        t0,
    )


def _dual_matrix(n: int, m: int) -> symfun.PolyMatrix:
    """The mixed (m+n) x (m+n) matrix: descending x-powers, ascending (-y)-powers."""
    size = n + m
    rows = []
    for r in range(1, size + 1):
        row = [xpoly(c) ** (size - r) for c in range(1, n + 1)]
        row += [(-ypoly(s)) ** (r - 1) for s in range(1, m + 1)]
        rows.append(row)
    return symfun.PolyMatrix.from_rows(rows)


def verify_dual_determinant(n: int, m: int) -> CheckReport:
    """det of the mixed power matrix vs the signed triple product.

    The global sign is epsilon(n, m) = (-1)^(n*m), fixed empirically from
    the 1x1 case and required to stay consistent across the grid; the report
    records the epsilon used.
    """
    t0 = time.perf_counter()
    if n < 1 or m < 1:
        raise ValueError("dual determinant needs n, m >= 1")
    checker = _Checker()
    determinant = symfun.det(_dual_matrix(n, m))
    product = symfun.vandermonde(n) * _to_y(symfun.vandermonde(m))
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            product = product * (Polynomial.one() + xpoly(i) * ypoly(j))
    epsilon = -1 if (n * m) % 2 else 1
    checker.eq(determinant, epsilon * product, side="det-vs-signed-product")
    return _finish(
        "dual-determinant",
        {"n": str(n), "m": str(m), "epsilon": f"{epsilon:+d}"},
        checker,
        t0,
    )


def verify_factorial_schur(shape: Sequence[int], n: int) -> CheckReport:
    """Factorial tableau sum vs the falling-power determinant quotient."""
    t0 = time.perf_counter()
    shape = partition(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    params = {"shape": partition_text(shape), "n": str(n)}
    checker = _Checker()
    try:
        tableaux_side = combinat.factorial_schur_tableaux(shape, n)
    except IndexUnderflow as exc:
        elapsed = int((time.perf_counter() - t0) * 1000)
        return CheckReport(
            "factorial-schur",
            {**params, "error": str(exc)},
            ERROR,
            elapsed_ms=elapsed,
        )
    quotient_side = symfun.factorial_schur_quotient(shape, n)
    checker.eq(tableaux_side, quotient_side, side="tableaux-vs-quotient")
    plain = combinat.schur_tableaux(shape, n)
    checker.eq(substitute_zero(tableaux_side, Family.A, 1), plain, side="tableaux-at-a0")
    checker.eq(substitute_zero(quotient_side, Family.A, 1), plain, side="quotient-at-a0")
    return _finish("factorial-schur", params, checker, t0)


def verify_newton(n_power: int) -> CheckReport:
    """Newton expansion collapses to t^n; table entries match the h oracle."""
    t0 = time.perf_counter()
    if n_power < 0:
        raise ValueError("newton check needs n_power >= 0")
    checker = _Checker()
    checker.eq(symfun.newton_expand(n_power), tpoly() ** n_power, side="expansion")
    for k in range(1, n_power + 2):
        checker.eq(
            symfun.divided_difference(n_power, k),
            symfun.complete_homogeneous(n_power - k + 1, k),
            side="table-entry",
            k=k,
        )
    return _finish("newton", {"n_power": str(n_power)}, checker, t0)


# -- the suite ----------------------------------------------------------------


@dataclass
class SuiteConfig:
    """Size bounds for the full verification suite."""

    max_partition_size: int = 6
    max_n: int = 4
    cauchy_cap: int = 4
    dual_max: int = 3
    newton_max: int = 8
    only: list[str] | None = None
    corrupt: str | None = None  # None, "weights" or "determinant": negative controls

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        allowed = {
            "max_partition_size",
            "max_n",
            "cauchy_cap",
            "dual_max",
            "newton_max",
            "only",
        }
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        config = cls()
        for key in allowed - {"only"}:
            if key in data:
                value = data[key]
                if not isinstance(value, int) or value < 0:
                    raise ValueError(f"config key {key} must be a non-negative int")
                setattr(config, key, value)
        if "only" in data:
            only = data["only"]
            if not isinstance(only, list) or not all(isinstance(s, str) for s in only):
                raise ValueError("config key 'only' must be a list of identity names")
            bad = [s for s in only if s not in IDENTITY_NAMES]
            if bad:
                raise ValueError(f"unknown identity names in 'only': {bad}")
            config.only = only
        return config


def _shapes_grid(n: int, max_size: int) -> list[tuple[int, ...]]:
    return [
        shape
        for shape in combinat.partitions_in_box(n, max_size)
        if sum(shape) <= max_size
    ]


def _grid_entry(
    identity: str,
    base_params: dict[str, str],
    shapes: Sequence[tuple[int, ...]],
    point_check: Callable[[Sequence[int]], CheckReport],
) -> CheckReport:
    t0 = time.perf_counter()
    for shape in shapes:
        report = point_check(shape)
        if report.status != VERIFIED:
            report.identity = identity
            report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
            return report
    elapsed = int((time.perf_counter() - t0) * 1000)
    return CheckReport(
        identity,
        {**base_params, "shapes": str(len(shapes))},
        VERIFIED,
        elapsed_ms=elapsed,
    )


def run_suite(config: SuiteConfig | None = None) -> list[CheckReport]:
    """Run every verifier over its parameter grid, in a deterministic order."""
    config = config or SuiteConfig()
    selected = IDENTITY_NAMES if config.only is None else tuple(config.only)
    corrupt_weights = config.corrupt == "weights"
    corrupt_determinant = config.corrupt == "determinant"
    reports: list[CheckReport] = []

    def wanted(name: str) -> bool:
        return name in selected

    if wanted("main-lemma"):
        reports.append(verify_main_lemma(6, 6, corrupt_weights=corrupt_weights))
    if wanted("corollary"):
        reports.append(verify_corollary(4, 5))
    if wanted("vandermonde"):
        for n in range(1, 6):
            reports.append(verify_vandermonde(n))
    if wanted("jacobi-trudi"):
        for n in range(1, config.max_n + 1):
            reports.append(
                _grid_entry(
                    "jacobi-trudi",
                    {"n": str(n), "max_size": str(config.max_partition_size)},
                    _shapes_grid(n, config.max_partition_size),
                    lambda shape, n=n: verify_jacobi_trudi(
                        shape, n, flip_orientation=corrupt_determinant
                    ),
                )
            )
    if wanted("bialternant"):
        for n in range(1, config.max_n + 1):
            reports.append(
                _grid_entry(
                    "bialternant",
                    {"n": str(n), "max_size": str(config.max_partition_size)},
                    _shapes_grid(n, config.max_partition_size),
                    lambda shape, n=n: verify_bialternant(shape, n),
                )
            )
    if wanted("cauchy"):
        for n in range(1, min(2, config.max_n) + 1):
            reports.append(verify_cauchy(n, config.cauchy_cap))
    if wanted("dual-cauchy"):
        for n in range(1, config.dual_max + 1):
            for m in range(1, config.dual_max + 1):
                reports.append(verify_dual_cauchy(n, m))
    if wanted("dual-determinant"):
        pairs = [
            (n, m)
            for total in range(2, config.dual_max + 3)
            for n in range(1, total)
            for m in (total - n,)
        ]
        for n, m in pairs:
            reports.append(verify_dual_determinant(n, m))
    if wanted("factorial-schur"):
        for n in range(1, min(3, config.max_n) + 1):
            reports.append(
                _grid_entry(
                    "factorial-schur",
                    {"n": str(n), "max_size": str(min(4, config.max_partition_size))},
                    _shapes_grid(n, min(4, config.max_partition_size)),
                    lambda shape, n=n: verify_factorial_schur(shape, n),
                )
            )
    if wanted("newton"):
        t0 = time.perf_counter()
        for n_power in range(0, config.newton_max + 1):
            report = verify_newton(n_power)
            if report.status != VERIFIED:
                report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
                reports.append(report)
                break
        else:
            reports.append(
                CheckReport(
                    "newton",
                    {"n_max": str(config.newton_max)},
                    VERIFIED,
                    elapsed_ms=int((time.perf_counter() - t0) * 1000),
                )
            )
    return reports


def all_verified(reports: Sequence[CheckReport]) -> bool:
    return all(report.status == VERIFIED for report in reports)


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([report.to_json_dict() for report in reports], indent=2)
