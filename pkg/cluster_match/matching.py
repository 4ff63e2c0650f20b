from __future__ import annotations

import sys
from typing import Callable, Dict, FrozenSet, Generic, List, Tuple, TypeVar

from .config import DEFAULT_CONFIG, ClusterConfig
from .graphs import WeightedGraph
from .laurent import LaurentPolynomial, Monomial
from .types import LimitExceeded, VertexLimitExceeded

T = TypeVar("T")


class MatchingState(Generic[T]):
    """
    Memoized elimination over sets of unmatched vertices.

    The lowest unmatched vertex must be matched to one of its unmatched
    neighbours, so the value of a vertex set is the sum over those choices
    of edge weight times the value of the remaining set. Sets are int
    bitmasks; the memo lives as long as this state object.
    """

    def __init__(
        self,
        g: WeightedGraph,
        one: T,
        zero: T,
        extend: Callable[[T, Monomial], T],
    ):
        self.neighbours: List[List[Tuple[int, Monomial]]] = [
            [(u, w) for u, w, _ in adj] for adj in g.adjacency()
        ]
        self.one = one
        self.zero = zero
        self.extend = extend
        self.memo: Dict[int, T] = {0: one}

    def solve(self, unmatched: int) -> T:
        cached = self.memo.get(unmatched)
        if cached is not None:
            return cached
        v = (unmatched & -unmatched).bit_length() - 1
        rest = unmatched & ~(1 << v)
        total = self.zero
        for u, w in self.neighbours[v]:
            if rest >> u & 1:
                sub = self.solve(rest & ~(1 << u))
                if sub:
                    total = total + self.extend(sub, w)
        self.memo[unmatched] = total
        return total


def _check_width(g: WeightedGraph, config: ClusterConfig):
    if g.vertex_count > config.max_vertices:
        raise VertexLimitExceeded(
            f"{g.tag or 'graph'} has {g.vertex_count} vertices, limit is {config.max_vertices}"
        )
    # one recursion frame per matched pair
    needed = g.vertex_count // 2 + 100
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def match_polynomial(g: WeightedGraph, config: ClusterConfig | None = None) -> LaurentPolynomial:
    """
    Sum over all perfect matchings of the product of edge weights.

    The empty graph gives 1 and a graph with an odd number of vertices 0.
    """
    config = config or DEFAULT_CONFIG
    _check_width(g, config)
    if g.vertex_count % 2:
        return LaurentPolynomial.zero()
    state = MatchingState(
        g,
        LaurentPolynomial.one(),
        LaurentPolynomial.zero(),
        lambda p, w: p.shift(w.e1, w.e2),
    )
    result = state.solve((1 << g.vertex_count) - 1)
    config.logger.debug(f"{g.tag}: {len(state.memo)} states, {len(result)} terms")
    return result


def match_count(g: WeightedGraph, config: ClusterConfig | None = None) -> int:
    """
    Number of perfect matchings
    """
    config = config or DEFAULT_CONFIG
    _check_width(g, config)
    if g.vertex_count % 2:
        return 0
    state = MatchingState(g, 1, 0, lambda c, _: c)
    return state.solve((1 << g.vertex_count) - 1)


def enumerate_matchings(
    g: WeightedGraph, limit: int | None = None, config: ClusterConfig | None = None
) -> List[FrozenSet[int]]:
    """
    Every perfect matching as a set of edge indices, by plain backtracking.

    Raises LimitExceeded once more than ``limit`` matchings have been found.
    """
    config = config or DEFAULT_CONFIG
    if limit is None:
        limit = config.enumeration_limit
    _check_width(g, config)
    adj = g.adjacency()
    found: List[FrozenSet[int]] = []
    chosen: List[int] = []

    def walk(unmatched: int):
        if not unmatched:
            if len(found) >= limit:
                raise LimitExceeded(f"{g.tag or 'graph'} has more than {limit} perfect matchings")
            found.append(frozenset(chosen))
            return
        v = (unmatched & -unmatched).bit_length() - 1
        rest = unmatched & ~(1 << v)
        for u, _, i in adj[v]:
            if rest >> u & 1:
                chosen.append(i)
                walk(rest & ~(1 << u))
                chosen.pop()

    if g.vertex_count % 2 == 0:
        walk((1 << g.vertex_count) - 1)
    return found


def matching_weight(g: WeightedGraph, matching: FrozenSet[int]) -> Monomial:
    """Product of the weights of the edges in ``matching``"""
    e1 = sum(g.edges[i].weight.e1 for i in matching)
    e2 = sum(g.edges[i].weight.e2 for i in matching)
    return Monomial(e1, e2)
