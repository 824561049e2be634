"""Bounding functions for the resolvent degree of general polynomials.

A bounding function maps m to a threshold n beyond which the general
degree-n polynomial satisfies RD(n) <= n - m.  This module has the prior
threshold function built from plane-existence counting (bounding_function),
the improved one obtained from the obliteration pipeline on the ranges where
it wins (improved_bounding_function), the pipeline-only variant used to
locate the crossover between the two strategies (reduction_bounding_function
and crossover_table), and the end-user query rd_upper_bound.

Everything is exact integer arithmetic; the crossover scans avoid the
astronomically large reduction bounds of mid-range degrees with provable
integer lower bounds rather than ever computing them.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

from .arith import DomainError, SelfCheckError, ceil_div, exact_div
from .typealgebra import SemanticsMode, obliterate_top_degree
from .tschirnhaus import optimal_reduction_bound, tschirnhaus_polar_type

# scans give up beyond this m; generous for every published quantity
_SCAN_LIMIT = 512

# published values for m <= 14; above that the minimization formula governs
_SMALL_BOUNDING_TABLE = {
    1: 2, 2: 3, 3: 4, 4: 5, 5: 9, 6: 21, 7: 109, 8: 325, 9: 1681, 10: 15121,
    11: 151201, 12: 1663201, 13: 19958401, 14: 259459201,
}


def _fact_ratio(a: int, b: int) -> int:
    """a!/b! for a >= b >= 0, exact."""
    return exact_div(math.factorial(a), math.factorial(b))


def plane_dimension_threshold(d: int, k: int) -> int:
    """Minimal r >= 1 with (k+1)(r-k) >= sum_{j=2}^{d} C(k+j, j).

    This is the ambient-dimension threshold for the k-plane counting
    argument on systems of degree up to d.  Evaluated by the closed form
    k + ceil((C(k+d+1, d) - (k+2)) / (k+1)) and then self-checked against
    the defining inequality; a failed check is an implementation bug.
    """
    if d < 3:
        raise DomainError("plane threshold needs d >= 3")
    if k < 1:
        raise DomainError("plane threshold needs k >= 1")
    r = k + ceil_div(math.comb(k + d + 1, d) - (k + 2), k + 1)

    def slack(r_: int) -> int:
        return (k + 1) * (r_ - k) - sum(math.comb(k + j, j) for j in range(2, d + 1))

    if r < 1 or slack(r) < 0 or (r > 1 and slack(r - 1) >= 0):
        raise SelfCheckError(
            f"plane threshold closed form failed minimality at d={d}, k={k}")
    return r


def strategy_threshold(d: int, k: int) -> int:
    """Threshold of the degree-d plane-counting strategy at codimension k:
    max of the solving-degree branch (d+k)!/d! and the dimension-count
    branch at the plane threshold."""
    if d < 4:
        raise DomainError("strategy threshold needs d >= 4")
    if k < 1:
        raise DomainError("strategy threshold needs k >= 1")
    theta = plane_dimension_threshold(d, k)
    counting = math.comb(theta + d + 1, d) - (theta + 1) ** 2 - (theta + d)
    if counting < 0:
        warnings.warn(
            f"strategy threshold counting branch negative at d={d}, k={k}; "
            "clamped to 0", RuntimeWarning)
        counting = 0
    return max(_fact_ratio(d + k, d), counting)


def bounding_function(m: int) -> int:
    """Threshold G with RD(n) <= n - m for all n >= G(m).

    Fixed published values for m <= 14; for larger m, one more than the best
    strategy threshold over d in [4, m-2] (the strategy needs k >= 1).
    """
    if m < 1:
        raise DomainError("bounding function needs m >= 1")
    if m <= 14:
        return _SMALL_BOUNDING_TABLE[m]
    return 1 + min(strategy_threshold(d, m - d - 1) for d in range(4, m - 1))


@functools.lru_cache(maxsize=None)
def _reduction_bound(m: int, d: int, mode: SemanticsMode) -> int:
    return optimal_reduction_bound(m, d, mode).bound


def improved_bounding_function(m: int, mode: SemanticsMode) -> int:
    """The improved threshold: on m in [13,17] the better of the degree-5
    reduction bound and (m-1)!/120 + 1, on m in [22,25] the degree-6
    analogue with (m-1)!/720 + 1, elsewhere equal to bounding_function."""
    if m < 1:
        raise DomainError("bounding function needs m >= 1")
    if 13 <= m <= 17:
        return max(_reduction_bound(m, 5, mode),
                   exact_div(math.factorial(m - 1), 120) + 1)
    if 22 <= m <= 25:
        return max(_reduction_bound(m, 6, mode),
                   exact_div(math.factorial(m - 1), 720) + 1)
    return bounding_function(m)


def reduction_strategy_threshold(d: int, k: int, mode: SemanticsMode) -> int:
    """Threshold of the degree-d obliteration strategy at codimension k:
    max of the reduction bound at m = d+k+1 and (d+k)!/d! + 1."""
    if d < 4:
        raise DomainError("reduction strategy threshold needs d >= 4")
    if k < 1:
        raise DomainError("reduction strategy threshold needs k >= 1")
    return max(_reduction_bound(d + k + 1, d, mode),
               _fact_ratio(d + k, d) + 1)


# --- provable skip bounds for the minimization over d ---------------------

_EXACT_TOP_BITS = 64


def _reduction_bound_floor_log2(m: int, d: int) -> int | None:
    """Integer e with optimal_reduction_bound(m, d, any mode) >= 2**e, or
    None when the quadric stage is small enough to just compute exactly.

    Runs the reduction exactly while the top count fits in _EXACT_TOP_BITS
    bits; beyond that, each remaining level maps the top count T to at least
    T(T-1)/2, so T >= 2**e gives e' = 2e - 2 at the next level.  Finally the
    bound is at least lam2**2/4 once lam2 >= 8, in either mode.
    """
    t = tschirnhaus_polar_type(d, m)
    while len(t) > 2:
        if t[0].bit_length() > _EXACT_TOP_BITS:
            e = t[0].bit_length() - 1
            for _ in range(len(t) - 2):
                e = 2 * e - 2
            return 2 * e - 2
        t = obliterate_top_degree(t)
    lam2 = t[0]
    if lam2 >= 8:
        return (lam2 * lam2 // 4).bit_length() - 1
    return None


def _reduction_thresholds_by_degree(m: int, mode: SemanticsMode) -> dict[int, int]:
    """Evaluate reduction_strategy_threshold(d, m-d-1) for the d that can
    matter, skipping (with proof) the ones that cannot attain the minimum."""
    evaluated: dict[int, int] = {}
    best: int | None = None
    for d in range(4, m - 1):  # k = m - d - 1 >= 1
        k = m - d - 1
        if best is not None:
            if _fact_ratio(d + k, d) + 1 > best:
                continue
            floor_log2 = _reduction_bound_floor_log2(m, d)
            if floor_log2 is not None and floor_log2 >= best.bit_length():
                continue
        value = reduction_strategy_threshold(d, k, mode)
        evaluated[d] = value
        if best is None or value < best:
            best = value
    return evaluated


def reduction_bounding_function(m: int, mode: SemanticsMode) -> int:
    """The obliteration-only bounding function: the best reduction strategy
    threshold over d in [4, m-2]."""
    if m < 13:
        raise DomainError("reduction bounding function needs m >= 13")
    return min(_reduction_thresholds_by_degree(m, mode).values())


# --- tables ----------------------------------------------------------------

@dataclass(frozen=True)
class BoundTable:
    """A named table of exact integer cells, one labeled key per row.

    column_labels[0] names the key column.  Cells are exact ints; any
    approximate rendering happens strictly at the presentation layer.
    """

    name: str
    column_labels: tuple[str, ...]
    rows: tuple[tuple[str, tuple[int, ...]], ...]


def crossover_table(d_values: tuple[int, ...] = (5, 6, 7, 8),
                    mode: SemanticsMode = SemanticsMode.AS_PUBLISHED) -> BoundTable:
    """Per degree d, the smallest m where the plane-counting strategy d wins
    its bounding function (m_d) and the smallest m where the obliteration
    strategy d wins its own (M_d), scanning m upward."""
    first_plane: dict[int, int] = {}
    for d in d_values:
        m = max(d + 2, 15)
        while m <= _SCAN_LIMIT:
            if bounding_function(m) == 1 + strategy_threshold(d, m - d - 1):
                first_plane[d] = m
                break
            m += 1
        else:
            raise SelfCheckError(f"no plane-strategy crossover for d={d} "
                                 f"below m={_SCAN_LIMIT}")
    first_reduction: dict[int, int] = {}
    m = 13
    while len(first_reduction) < len(d_values) and m <= _SCAN_LIMIT:
        values = _reduction_thresholds_by_degree(m, mode)
        h = min(values.values())
        for d in d_values:
            if d not in first_reduction and values.get(d) == h:
                first_reduction[d] = m
        m += 1
    if len(first_reduction) < len(d_values):
        raise SelfCheckError("reduction-strategy crossover scan exhausted")
    rows = tuple(
        (str(d), (first_plane[d], first_reduction[d])) for d in d_values)
    return BoundTable(name="crossover",
                      column_labels=("d", "m_d", "M_d"),
                      rows=rows)


def reduction_bound_table(d: int, m_values: tuple[int, ...],
                          mode: SemanticsMode, factorial_divisor: int) -> BoundTable:
    """Reduction bounds next to the factorial column (m-1)!/divisor + 1."""
    rows = tuple(
        (str(m), (_reduction_bound(m, d, mode),
                  exact_div(math.factorial(m - 1), factorial_divisor) + 1))
        for m in m_values)
    return BoundTable(
        name=f"xi{d}",
        column_labels=("m", f"xi(m,{d})", f"(m-1)!/{factorial_divisor}+1"),
        rows=rows)


def bounding_function_table(m_values: tuple[int, ...] = tuple(range(1, 15))) -> BoundTable:
    rows = tuple((str(m), (bounding_function(m),)) for m in m_values)
    return BoundTable(name="g", column_labels=("m", "G(m)"), rows=rows)


def make_table(which: str, mode: SemanticsMode) -> BoundTable:
    """Build one of the named tables: xi5, xi6, g, crossover."""
    if which == "xi5":
        return reduction_bound_table(5, tuple(range(13, 18)), mode, 120)
    if which == "xi6":
        return reduction_bound_table(6, tuple(range(22, 26)), mode, 720)
    if which == "g":
        return bounding_function_table()
    if which == "crossover":
        return crossover_table(mode=mode)
    raise DomainError(f"unknown table {which!r}; "
                      "expected one of xi5, xi6, g, crossover")


# --- end-user query ----------------------------------------------------------

def _counting_branch_at_k1(d: int) -> int:
    theta = plane_dimension_threshold(d, 1)
    return max(0, math.comb(theta + d + 1, d) - (theta + 1) ** 2 - (theta + d))


def rd_upper_bound(n: int, mode: SemanticsMode) -> tuple[int, int]:
    """Largest m whose improved bounding function is at most n, and the
    resulting resolvent-degree bound n - m.

    The upward scan stops at a provable ceiling: a strategy d can only put
    G'(m) <= n if both (m-1)!/d! <= n and its counting branch at k=1 is
    <= n (the counting branch is nondecreasing in k), so once (m-1)! exceeds
    n * max(720, D!), with D the largest d whose k=1 counting branch fits,
    no larger m can qualify.
    """
    if n < 2:
        raise DomainError("rd query needs n >= 2")
    largest_feasible_d = 4
    for d in range(4, n.bit_length() + 4):
        if _counting_branch_at_k1(d) <= n:
            largest_feasible_d = max(largest_feasible_d, d)
    ceiling_factor = n * max(720, math.factorial(largest_feasible_d))
    best_m = None
    m = 1
    while m <= _SCAN_LIMIT:
        if m >= 27 and math.factorial(m - 1) > ceiling_factor:
            break
        if improved_bounding_function(m, mode) <= n:
            best_m = m
        m += 1
    if best_m is None:
        raise SelfCheckError(f"no feasible m for n={n}")  # n >= 2 = G'(1)
    return best_m, n - best_m
