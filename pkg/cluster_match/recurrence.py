from __future__ import annotations

from typing import Dict, Optional

from .config import DEFAULT_CONFIG, ClusterConfig
from .laurent import LaurentPolynomial, Monomial, div_exact, eval, swap_vars
from .types import CaseParams, IdentityId, Interval, VerificationReport


class SequenceCache:
    """
    Lazily computed x_n for one pair (b, c), in both directions.

    x_1 = x1 and x_2 = x2; for every n, x_n * x_{n-2} = x_{n-1}^e + 1 with
    e = b when n is odd and e = c when n is even. Values are filled in
    contiguously outward from the generators, so the cache always holds an
    interval of indices.
    """

    params: CaseParams
    values: Dict[int, LaurentPolynomial]
    config: ClusterConfig

    def __init__(self, params: CaseParams | tuple, config: ClusterConfig | None = None):
        if not isinstance(params, CaseParams):
            params = CaseParams(*params)
        self.params = params
        self.config = config or DEFAULT_CONFIG
        self.values = {1: Monomial(1, 0), 2: Monomial(0, 1)}
        self._lo = 1
        self._hi = 2

    def __repr__(self):
        return f"SequenceCache({self.params!r}, cached=[{self._lo}, {self._hi}])"

    def x_at(self, n: int) -> LaurentPolynomial:
        while self._hi < n:
            k = self._hi + 1
            e = self.params.exponent_at(k)
            self.values[k] = div_exact(self.values[k - 1] ** e + 1, self.values[k - 2])
            self._hi = k
            self.config.logger.debug(f"{self.params} x_{k}: {len(self.values[k])} terms")
        while self._lo > n:
            k = self._lo - 1
            # relation x_{k+2} x_k = x_{k+1}^e + 1, e by parity of k + 2
            e = self.params.exponent_at(k)
            self.values[k] = div_exact(self.values[k + 1] ** e + 1, self.values[k + 2])
            self._lo = k
            self.config.logger.debug(f"{self.params} x_{k}: {len(self.values[k])} terms")
        return self.values[n]

    def eval_at_ones(self, n: int) -> int:
        return eval(self.x_at(n), 1, 1)


def x_at(cache: SequenceCache, n: int) -> LaurentPolynomial:
    """
    The n-th term of the sequence held by ``cache`` (any integer n)
    """
    return cache.x_at(n)


def eval_at_ones(cache: SequenceCache, n: int) -> int:
    """
    Number of terms of x_n counted with multiplicity, i.e. x_n(1, 1)
    """
    return cache.eval_at_ones(n)


def detect_period(
    params: CaseParams | tuple, horizon: int, config: ClusterConfig | None = None
) -> Optional[int]:
    """
    Smallest p <= horizon with x_{n+p} = x_n on the verification window,
    or None.

    Whole Laurent polynomials are compared, never evaluations.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    config = config or DEFAULT_CONFIG
    cache = SequenceCache(params, config)
    window = max(2, config.period_window)
    for p in range(1, horizon + 1):
        if all(cache.x_at(n + p) == cache.x_at(n) for n in range(1, window + 1)):
            config.logger.info(f"{cache.params} has period {p}")
            return p
    config.logger.info(f"{cache.params} has no period up to {horizon}")
    return None


def check_reciprocity(
    b: int, c: int, n_range: Interval, config: ClusterConfig | None = None
) -> VerificationReport:
    """
    Check x_{-n}^{(b,c)}(x1, x2) = x_{n+3}^{(c,b)}(x2, x1) for n in ``n_range``
    """
    params = CaseParams(b, c)
    left = SequenceCache(params, config)
    right = SequenceCache(params.dual(), config)
    report = VerificationReport(IdentityId.RECIPROCITY, n_range, note=f"case {params}")
    for n in n_range:
        report.record(n, left.x_at(-n), swap_vars(right.x_at(n + 3)))
    return report
