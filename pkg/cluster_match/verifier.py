"""
Exact checks of the polynomial identities behind the matching formulas.

Every identity compares two sides computed as exact Laurent polynomials.
Graph-side values come from the matching engine and sequence values from
the recurrence engine, so the main theorems test two independent
pipelines against each other.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .closed_forms import m14, m22, sq_oct
from .config import DEFAULT_CONFIG, ClusterConfig
from .graphs import (
    build_G14,
    build_G22,
    build_G41,
    build_H,
    build_tildeG14,
    disjoint_union,
    is_weighted_isomorphic,
    strip_end_squares,
)
from .laurent import LaurentPolynomial, Monomial, is_strictly_positive, split_denominator
from .matching import match_polynomial
from .recurrence import SequenceCache, check_reciprocity, detect_period
from .types import (
    CaseParams,
    IdentityId,
    Interval,
    UnknownIdentity,
    UnsupportedCase,
    VerificationReport,
)

X1 = LaurentPolynomial.x1()
X2 = LaurentPolynomial.x2()
# x1^4 + (x2+1)^2
Z14 = X1**4 + (X2 + 1) ** 2
# x1^2 + x2^2 + 1
Z22 = X1**2 + X2**2 + 1

PERIOD_HORIZON = 20


class PolynomialSource:
    """
    Memoized p_n, tilde-p_m and q_m from the matching engine and x_n from
    the recurrence. One instance per verification task.
    """

    def __init__(self, config: ClusterConfig | None = None):
        self.config = config or DEFAULT_CONFIG
        self._memo: Dict[Tuple[str, int], LaurentPolynomial] = {}
        self._sequences: Dict[CaseParams, SequenceCache] = {}

    def _graph_value(self, key: str, n: int, build: Callable) -> LaurentPolynomial:
        if (key, n) not in self._memo:
            self._memo[(key, n)] = match_polynomial(build(n), self.config)
        return self._memo[(key, n)]

    def p14(self, n: int) -> LaurentPolynomial:
        return self._graph_value("p14", n, lambda k: build_G14(k, self.config))

    def tp14(self, m: int) -> LaurentPolynomial:
        return self._graph_value("tp14", m, lambda k: build_tildeG14(k, self.config))

    def p41(self, n: int) -> LaurentPolynomial:
        return self._graph_value("p41", n, lambda k: build_G41(k, self.config))

    def p22(self, n: int) -> LaurentPolynomial:
        return self._graph_value("p22", n, build_G22)

    def q22(self, m: int) -> LaurentPolynomial:
        return self._graph_value("q22", m, build_H)

    def x(self, case: CaseParams | tuple, n: int) -> LaurentPolynomial:
        case = case if isinstance(case, CaseParams) else CaseParams(*case)
        if case not in self._sequences:
            self._sequences[case] = SequenceCache(case, self.config)
        return self._sequences[case].x_at(n)


Sides = Tuple[LaurentPolynomial, LaurentPolynomial]


@dataclass(frozen=True)
class _Identity:
    valid: Callable[[int], bool]
    indices: Callable[[int], Sequence[int]]
    sides: Callable[[PolynomialSource, int], Sides]


def _mono(e1: int, e2: int) -> LaurentPolynomial:
    return Monomial(e1, e2)


def _main_22(s: PolynomialSource, n: int) -> Sides:
    return s.p22(n), s.x((2, 2), n) * m22(n)


def _main_14(s: PolynomialSource, n: int) -> Sides:
    return s.p14(n), s.x((1, 4), n) * m14(n)


def _main_41(s: PolynomialSource, n: int) -> Sides:
    sq, oct = sq_oct(3 - n)
    return s.p41(n), s.x((4, 1), n) * _mono(oct, sq)


def _p_recur_22(s: PolynomialSource, n: int) -> Sides:
    return s.p22(n) * s.p22(n - 2), s.p22(n - 1) ** 2 + _mono(2 * n - 6, 2 * n - 8)


def _linear_22(s: PolynomialSource, n: int) -> Sides:
    return s.p22(n + 1), Z22 * s.p22(n) - _mono(2, 2) * s.p22(n - 1)


def _odd_q_22(s: PolynomialSource, n: int) -> Sides:
    lhs = s.q22(2 * n - 3) * s.q22(2 * n - 7)
    return lhs, s.q22(2 * n - 5) ** 2 - _mono(2 * n - 6, 2 * n - 6)


def _disjoint_22(s: PolynomialSource, n: int) -> Sides:
    union = disjoint_union(build_G22(n), build_H(3))
    return s.p22(n + 1) + _mono(2, 2) * s.p22(n - 1), match_polynomial(union, s.config)


def _step1_14(s: PolynomialSource, n: int) -> Sides:
    lhs = s.p14(2 * n + 1) * s.p14(2 * n + 3)
    return lhs, s.p14(2 * n + 2) + _mono(abs(4 * n + 2) - 2, abs(2 * n) - 1)


def _step2_14(s: PolynomialSource, n: int) -> Sides:
    lhs = s.p14(2 * n) * s.p14(2 * n + 2)
    return lhs, s.p14(2 * n + 1) ** 4 + _mono(abs(8 * n) - 4, abs(4 * n - 2) - 2)


def _tilde_linear(s: PolynomialSource, n: int) -> Sides:
    if n > 0:
        rhs = (X2 + 1) * s.tp14(2 * n + 1) - _mono(4, 1) * s.tp14(2 * n - 1)
    else:
        rhs = (X1**4 + X2 + 1) * s.tp14(2 * n + 3) - _mono(4, 2) * s.tp14(2 * n + 5)
    return s.p14(2 * n + 1), rhs


def _mixed(s: PolynomialSource, n: int) -> Sides:
    lhs = s.p14(2 * n - 1) * s.tp14(2 * n + 1) - s.p14(2 * n + 1) * s.tp14(2 * n - 1)
    if n > 0:
        return lhs, _mono(4 * n - 4, 2 * n - 3)
    return lhs, -_mono(-4 * n, -2 * n + 1) * (X2 + 1)


def _tildes(s: PolynomialSource, n: int) -> Sides:
    lhs = s.tp14(2 * n + 1) ** 2 - s.tp14(2 * n - 1) * s.tp14(2 * n + 3)
    if n > 0:
        return lhs, _mono(4 * n - 4, 2 * n - 2)
    return lhs, _mono(-4 * n, -2 * n)


def _keystep(s: PolynomialSource, n: int) -> Sides:
    lhs = s.tp14(2 * n + 1) * s.tp14(2 * n - 1) - s.tp14(2 * n - 3) * s.tp14(2 * n + 3)
    if n > 0:
        return lhs, _mono(4 * n - 8, 2 * n - 4) * Z14
    return lhs, _mono(-4 * n, -2 * n) * Z14


def _prod_diff(s: PolynomialSource, n: int) -> Sides:
    lhs = s.p14(2 * n - 1) * s.p14(2 * n + 3) - s.p14(2 * n + 1) ** 2
    if n > 0:
        return lhs, _mono(4 * n - 4, 2 * n - 3) * Z14
    return lhs, _mono(-4 * n - 4, -2 * n - 1) * Z14


def _three_term(s: PolynomialSource, n: int) -> Sides:
    if n > 0:
        return s.p14(2 * n + 3), Z14 * s.p14(2 * n + 1) - _mono(4, 2) * s.p14(2 * n - 1)
    return s.p14(2 * n - 1), Z14 * s.p14(2 * n + 1) - _mono(4, 2) * s.p14(2 * n + 3)


def _semi_14(s: PolynomialSource, n: int) -> Sides:
    rhs = s.tp14(2 * n + 1) * s.tp14(5) - _mono(4, 2) * s.tp14(2 * n - 1)
    return s.tp14(2 * n + 3), rhs


def _outside(lo: int, hi: int) -> Callable[[int], bool]:
    """n >= lo or n <= hi"""
    return lambda n: n >= lo or n <= hi


IDENTITIES: Dict[IdentityId, _Identity] = {
    IdentityId.MAIN_22: _Identity(lambda n: n >= 3, lambda n: [n], _main_22),
    IdentityId.P_RECUR_22: _Identity(lambda n: n >= 5, lambda n: [n - 2, n], _p_recur_22),
    IdentityId.LINEAR_22: _Identity(lambda n: n >= 4, lambda n: [n - 1, n + 1], _linear_22),
    IdentityId.ODD_Q_22: _Identity(lambda n: n >= 4, lambda n: [n], _odd_q_22),
    IdentityId.DISJOINT_22: _Identity(lambda n: n >= 4, lambda n: [n - 1, n + 1], _disjoint_22),
    IdentityId.MAIN_14: _Identity(lambda n: n not in (1, 2), lambda n: [n], _main_14),
    IdentityId.MAIN_41: _Identity(lambda n: n not in (1, 2), lambda n: [n], _main_41),
    IdentityId.STEP1_14: _Identity(
        _outside(1, -2), lambda n: [2 * n + 1, 2 * n + 3], _step1_14
    ),
    IdentityId.STEP2_14: _Identity(_outside(2, -1), lambda n: [2 * n, 2 * n + 2], _step2_14),
    IdentityId.TILDE_LINEAR: _Identity(
        _outside(2, -2),
        lambda n: [2 * n + 1, 2 * n + 5] if n < 0 else [2 * n - 1, 2 * n + 1],
        _tilde_linear,
    ),
    IdentityId.MIXED: _Identity(_outside(2, -2), lambda n: [2 * n - 1, 2 * n + 1], _mixed),
    IdentityId.TILDES: _Identity(_outside(2, -2), lambda n: [2 * n - 1, 2 * n + 3], _tildes),
    IdentityId.KEYSTEP: _Identity(_outside(3, -2), lambda n: [2 * n - 3, 2 * n + 3], _keystep),
    IdentityId.PROD_DIFF: _Identity(
        _outside(2, -2), lambda n: [2 * n - 1, 2 * n + 3], _prod_diff
    ),
    IdentityId.THREE_TERM: _Identity(
        _outside(2, -2), lambda n: [2 * n - 1, 2 * n + 3], _three_term
    ),
    IdentityId.SEMI_14: _Identity(lambda n: n >= 2, lambda n: [2 * n - 1, 2 * n + 3], _semi_14),
}

MAIN_THEOREMS = {
    CaseParams(2, 2): IdentityId.MAIN_22,
    CaseParams(1, 4): IdentityId.MAIN_14,
    CaseParams(4, 1): IdentityId.MAIN_41,
}


def _check(
    identity: IdentityId,
    n_range: Interval,
    source: PolynomialSource,
    window: Optional[Interval] = None,
) -> VerificationReport:
    entry = IDENTITIES[identity]
    report = VerificationReport(identity, n_range)
    skipped = 0
    for n in n_range:
        if not entry.valid(n) or (window and not all(i in window for i in entry.indices(n))):
            skipped += 1
            continue
        lhs, rhs = entry.sides(source, n)
        report.record(n, lhs, rhs)
        source.config.logger.debug(f"{identity.value} n={n}: {'ok' if lhs == rhs else 'FAIL'}")
    if skipped:
        report.note = f"{skipped} indices outside the valid range skipped"
    return report


def _check_positivity(case: CaseParams, n_range: Interval, source: PolynomialSource):
    report = VerificationReport(IdentityId.POSITIVITY, n_range, note=f"case {case}")
    for n in n_range:
        if n in (1, 2):
            continue
        numerator, _ = split_denominator(source.x(case, n))
        report.checked += 1
        if not is_strictly_positive(numerator):
            report.failures.append((n, numerator, "strictly positive coefficients"))
    return report


def expected_period(case: CaseParams) -> Optional[int]:
    """Periods of the finite-type cases bc <= 3; None when bc >= 4"""
    return {1: 5, 2: 6, 3: 8}.get(case.b * case.c)


def _check_periodicity(case: CaseParams, horizon: int, config: ClusterConfig):
    report = VerificationReport(
        IdentityId.PERIODICITY, Interval(1, horizon), checked=1, note=f"case {case}"
    )
    expected = expected_period(case)
    found = detect_period(case, horizon, config)
    if found != expected:
        report.failures.append((horizon, expected, found))
    return report


def _check_shapes(n_range: Interval, config: ClusterConfig):
    report = VerificationReport(IdentityId.SHAPE_RECIPROCITY, n_range)
    for n in n_range:
        if n < 0:
            continue
        a, b = build_tildeG14(-2 * n - 1, config), build_tildeG14(2 * n + 5, config)
        report.checked += 1
        if not is_weighted_isomorphic(a, b):
            report.failures.append((n, a.tag, b.tag))
        if n >= 1:
            a = strip_end_squares(build_G14(2 * n + 3, config))
            b = build_G14(-2 * n + 1, config)
            if not is_weighted_isomorphic(a, b):
                report.failures.append((n, a.tag, b.tag))
    return report


def verify_identity(
    identity: IdentityId | str,
    n_range: Interval,
    case: CaseParams | tuple | None = None,
    config: ClusterConfig | None = None,
) -> VerificationReport:
    """
    Check one identity for every valid n in ``n_range``.

    ``case`` selects the pair (b, c) for RECIPROCITY, POSITIVITY and
    PERIODICITY (default (1,4)); PERIODICITY uses ``n_range.hi`` as horizon.
    """
    if not isinstance(identity, IdentityId):
        identity = IdentityId.parse(identity)
    config = config or DEFAULT_CONFIG
    if case is not None and not isinstance(case, CaseParams):
        case = CaseParams(*case)
    case = case or CaseParams(1, 4)
    config.logger.info(f"verifying {identity.value} over {n_range}")
    if identity in IDENTITIES:
        return _check(identity, n_range, PolynomialSource(config))
    if identity == IdentityId.RECIPROCITY:
        return check_reciprocity(case.b, case.c, n_range, config)
    if identity == IdentityId.POSITIVITY:
        return _check_positivity(case, n_range, PolynomialSource(config))
    if identity == IdentityId.PERIODICITY:
        return _check_periodicity(case, max(1, n_range.hi), config)
    if identity == IdentityId.SHAPE_RECIPROCITY:
        return _check_shapes(n_range, config)
    raise UnknownIdentity(f"No check registered for {identity}")


def verify_main_theorem(
    case: CaseParams | tuple, n_range: Interval, config: ClusterConfig | None = None
) -> VerificationReport:
    """
    match_polynomial(G_n) == x_n * m_n for every graph index in ``n_range``
    """
    if not isinstance(case, CaseParams):
        case = CaseParams(*case)
    if case not in MAIN_THEOREMS:
        raise UnsupportedCase(f"No graph family for case {case}")
    return verify_identity(MAIN_THEOREMS[case], n_range, config=config)


def _suite_tasks(max_index: int, config: ClusterConfig) -> List[Callable[[], VerificationReport]]:
    full = Interval(-max_index, max_index)
    window = Interval(-max_index, max_index + 4)
    tasks: List[Callable[[], VerificationReport]] = []
    for identity in IdentityId:
        if identity in IDENTITIES:
            tasks.append(
                lambda i=identity: _check(i, full, PolynomialSource(config), window)
            )
        elif identity == IdentityId.RECIPROCITY:
            for case in [(1, 4), (4, 1), (2, 2), (1, 1), (1, 2), (1, 3)]:
                tasks.append(
                    lambda c=case: check_reciprocity(c[0], c[1], Interval(0, max_index), config)
                )
        elif identity == IdentityId.SHAPE_RECIPROCITY:
            tasks.append(lambda: _check_shapes(Interval(0, (max_index - 1) // 2), config))
        elif identity == IdentityId.POSITIVITY:
            for case in [(1, 4), (4, 1), (2, 2)]:
                tasks.append(
                    lambda c=case: _check_positivity(CaseParams(*c), full, PolynomialSource(config))
                )
        elif identity == IdentityId.PERIODICITY:
            for case in [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4)]:
                tasks.append(
                    lambda c=case: _check_periodicity(CaseParams(*c), PERIOD_HORIZON, config)
                )
    return tasks


def run_full_suite(max_index: int, config: ClusterConfig | None = None) -> List[VerificationReport]:
    """
    Every identity over its valid range inside [-max_index, max_index].

    Graph indices are kept inside [-max_index, max_index + 4]. The report
    order is fixed no matter how many worker threads are used.
    """
    if max_index < 5:
        raise ValueError(f"max_index must be at least 5, got {max_index}")
    config = config or DEFAULT_CONFIG
    tasks = _suite_tasks(max_index, config)
    config.logger.info(f"running {len(tasks)} checks with {config.suite_workers} worker(s)")
    if config.suite_workers <= 1:
        reports = [task() for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=config.suite_workers) as pool:
            reports = list(pool.map(lambda task: task(), tasks))
    failed = [r.identity.value for r in reports if not r.passed]
    if failed:
        config.logger.warning(f"failed identities: {', '.join(failed)}")
    return reports


def to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
