"""
Closed forms: denominator monomials, the explicit (2,2) binomial sums,
subset counts, and the Chebyshev-type elements s_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from .laurent import LaurentPolynomial, Monomial
from .types import CaseParams, GroundSetTooLarge, IndexOutOfFamily, UnsupportedCase

BRUTEFORCE_MAX_N = 24


def binom(n: int, k: int) -> int:
    """
    C(n, k), with C(n, 0) = 1 for every n and 0 whenever k < 0 or k > n
    otherwise.
    """
    if k == 0:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multichoose(n: int, k: int) -> int:
    """Number of size-k multisets drawn from n kinds"""
    if n < 0 or k < 0:
        return 0
    return binom(n + k - 1, k)


def m22(n: int) -> Monomial:
    if n < 3:
        raise IndexOutOfFamily(f"m_n for (2,2) needs n >= 3, got {n}")
    return Monomial(n - 2, n - 3)


def sq_oct(n: int) -> Tuple[int, int]:
    """
    (squares, octagons) of the (1,4) graph G_n
    """
    if n in (1, 2):
        raise IndexOutOfFamily(f"G_n for (1,4) is undefined at n={n}")
    if n % 2:
        return abs(n - 1) - 1, (abs(n - 2) - 1) // 2
    return abs(2 * n - 2) - 2, abs(n - 2) - 1


def m14(n: int) -> Monomial:
    """x1^sq(n) * x2^oct(n)"""
    sq, oct = sq_oct(n)
    return Monomial(sq, oct)


def tilde_m14(m: int) -> Monomial:
    """
    x1^(2k) * x2^k, where k is the number of octagons of tilde-G_m
    """
    if m % 2 == 0:
        raise IndexOutOfFamily(f"tilde-G_m needs odd m, got {m}")
    k = (m - 3) // 2 if m >= 3 else (1 - m) // 2
    return Monomial(2 * k, k)


def explicit_x22(n: int) -> LaurentPolynomial:
    """
    x_n for (2,2) from the binomial sum formulas, without any recurrence
    """
    if n in (1, 2):
        raise IndexOutOfFamily(f"No closed form for the generator x_{n}")
    terms = []
    if n >= 3:
        k = n - 3
        terms.append((0, 2 * k + 2, 1))
        for q in range(k + 1):
            for r in range(k + 1 - q):
                terms.append((2 * q, 2 * r, binom(k - r, q) * binom(k + 1 - q, r)))
        return LaurentPolynomial.from_terms(terms).shift(-(k + 1), -k)
    k = -n
    terms.append((2 * k + 2, 0, 1))
    for q in range(k + 1):
        for r in range(k + 1 - q):
            terms.append((2 * q, 2 * r, binom(k + 1 - r, q) * binom(k - q, r)))
    return LaurentPolynomial.from_terms(terms).shift(-k, -(k + 1))


@dataclass(frozen=True)
class SubsetCountQuery:
    """
    Subsets of {1..N} with q odd and r even elements, no two consecutive
    """

    N: int
    q: int
    r: int


def subset_count_formula(qy: SubsetCountQuery) -> int:
    n, odd = divmod(qy.N, 2)
    if odd:
        return binom(n + 1 - qy.r, qy.q) * binom(n - qy.q, qy.r)
    return binom(n - qy.r, qy.q) * binom(n - qy.q, qy.r)


def subset_count_multiset(qy: SubsetCountQuery) -> int:
    """
    Count through the multiset reduction: subtract 0, 2, 4, ... from the
    sorted elements, leaving unconstrained multisets of odd and even values.
    """
    n, odd = divmod(qy.N, 2)
    slots = n - qy.q - qy.r + 1
    return multichoose(slots + odd, qy.q) * multichoose(slots, qy.r)


def subset_count_bruteforce(qy: SubsetCountQuery) -> int:
    if qy.N > BRUTEFORCE_MAX_N:
        raise GroundSetTooLarge(f"Ground set of size {qy.N} exceeds {BRUTEFORCE_MAX_N}")
    if qy.q < 0 or qy.r < 0:
        return 0
    count = 0
    for subset in combinations(range(1, qy.N + 1), qy.q + qy.r):
        if any(b - a == 1 for a, b in zip(subset, subset[1:])):
            continue
        if sum(x % 2 for x in subset) == qy.q:
            count += 1
    return count


_S1 = {
    CaseParams(2, 2): LaurentPolynomial.from_terms([(2, 0, 1), (0, 2, 1), (0, 0, 1)]).shift(-1, -1),
    CaseParams(1, 4): LaurentPolynomial.from_terms(
        [(4, 0, 1), (0, 2, 1), (0, 1, 2), (0, 0, 1)]
    ).shift(-2, -1),
}


def chebyshev_s(case: CaseParams | tuple, n: int) -> LaurentPolynomial:
    """
    s_0 = 1, s_1 = z, s_n = z * s_{n-1} - s_{n-2}
    """
    if not isinstance(case, CaseParams):
        case = CaseParams(*case)
    if case not in _S1:
        raise UnsupportedCase(f"No Chebyshev elements for case {case}")
    if n < 0:
        raise IndexOutOfFamily(f"s_n needs n >= 0, got {n}")
    z = _S1[case]
    prev, cur = LaurentPolynomial.one(), z
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, z * cur - prev
    return cur


def q_22(m: int) -> LaurentPolynomial:
    """
    Matching polynomial of the grid H_m through its transfer recurrence
    """
    if m < 0:
        raise IndexOutOfFamily(f"Grid length must be nonnegative, got {m}")
    prev, cur = LaurentPolynomial.one(), LaurentPolynomial.one()
    for j in range(1, m):
        w = Monomial(0, 2) if j % 2 else Monomial(2, 0)
        prev, cur = cur, cur + w * prev
    return cur
