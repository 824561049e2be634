"""Optimal reduction bounds for Tschirnhaus complete intersections.

The pipeline: start from the multidegree type of an iterated polar cone of
the complete intersection killing the first d coefficients, obliterate
degrees d down to 3 (explicit reduction for high degrees, the quartic/cubic
closed forms below that), and stop at the quadric stage (quadrics, lines) =
(lam2, lam1).  Instead of reducing all quadrics away, stop with q of them
left: a point is then found by solving one polynomial of degree 2^q, at the
price of keeping q quadrics' worth of ambient dimension.  The bound for each
q is the max of an exponential branch 2^q + 1 and a linear branch counting
dimensions; the optimum over q sits at their crossover.

Both candidate-formula variants are implemented.  CORRECTED charges the
linear branch with the full hyperplane count lam1; AS_PUBLISHED is the
printed algorithm, which replaces q + lam1 by lam2 in that branch.  Only
AS_PUBLISHED reproduces the published threshold tables; see the generated
discrepancy report.  The reduction to the quadric stage itself always uses
loop-consistent closed forms inside optimal_reduction_bound, in either mode:
feeding the printed quartic variant through the pipeline reproduces no
published value (evidence in the report).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import DomainError
from .typealgebra import (
    Multidegree,
    SemanticsMode,
    as_multidegree,
    cubics_closed,
    obliterate_top_degree,
    quartics_closed,
)

# refuse to materialize 2**q beyond this many bits (about 0.5 MB); the
# crossover search never gets anywhere near it
_MAX_POW2_BITS = 1 << 22


def tschirnhaus_polar_type(d: int, m: int) -> Multidegree:
    """Type of the (m-d-1)-st polar cone of the degree-(1..d) Tschirnhaus
    complete intersection: slot i holds C(m-d-1+i, i), descending degrees.
    """
    if d < 2:
        raise DomainError("top degree must be at least 2")
    if m < d + 2:
        raise DomainError("need m >= d + 2")
    level = m - d - 1
    return tuple(math.comb(level + i, i) for i in range(d))


def reduce_type_to_quadrics(t: Sequence[int], mode: SemanticsMode) -> tuple[int, int]:
    """Obliterate degrees down to 3 and return the quadric stage (lam2, lam1).

    Degrees 5 and up use the explicit reduction; the degree-4 and degree-3
    levels use the closed forms in the given mode.
    """
    t = as_multidegree(t)
    if len(t) < 3:
        raise DomainError("need top degree at least 3 to reach a quadric stage")
    while len(t) > 4:
        t = obliterate_top_degree(t)
    if len(t) == 4:
        if t[0] == 0:
            t = t[1:]
        else:
            t = quartics_closed(*t, mode)
    if t[0] == 0:
        lam2, lam1 = t[1], t[2]
    else:
        lam2, lam1 = cubics_closed(*t)
    return lam2, lam1


def reduce_to_quadric_stage(d: int, m: int, mode: SemanticsMode) -> tuple[int, int]:
    """Quadric stage (lam2, lam1) of the Tschirnhaus pipeline for (d, m)."""
    if d < 3:
        raise DomainError("reduction pipeline needs d >= 3")
    return reduce_type_to_quadrics(tschirnhaus_polar_type(d, m), mode)


def _linear_branch(m: int, d: int, q: int, lam2: int, lam1: int,
                   mode: SemanticsMode) -> int:
    if mode is SemanticsMode.AS_PUBLISHED:
        # printed bookkeeping: no lam1, the lam2(lam2+1)/2 hyperplane total
        return (m - d + 1) + q + (lam2 * (lam2 + 1) - q * (q + 1)) // 2
    # full count: q quadrics + lam1 + sum_{v=q}^{lam2-1} v hyperplanes
    return (m - d + 1) + q + lam1 + (lam2 * (lam2 - 1) - q * (q - 1)) // 2


def _pow2_plus_1(q: int) -> int:
    if q > _MAX_POW2_BITS:
        raise DomainError(f"2**{q} is too large to materialize")
    return (1 << q) + 1


def reduction_candidate(m: int, d: int, q: int, lam2: int, lam1: int,
                        mode: SemanticsMode) -> int:
    """Bound candidate with q quadrics kept: max of the exponential branch
    2^q + 1 and the mode's linear branch."""
    if not 1 <= q <= lam2:
        raise DomainError("q must satisfy 1 <= q <= lam2")
    lin = _linear_branch(m, d, q, lam2, lam1, mode)
    if q >= lin.bit_length():
        return _pow2_plus_1(q)  # exponential branch surely dominates
    return max(lin, _pow2_plus_1(q))


def _exp_dominates(m: int, d: int, q: int, lam2: int, lam1: int,
                   mode: SemanticsMode) -> bool:
    # 2^q + 1 >= linear branch, decided on bit lengths except at the margin
    lin = _linear_branch(m, d, q, lam2, lam1, mode)
    b = lin.bit_length()
    if q >= b:
        return True
    if q <= b - 2:
        return False
    return _pow2_plus_1(q) >= lin


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of the optimal reduction bound search for one (m, d)."""

    m: int
    d: int
    quadrics: int            # lam2 at the quadric stage
    hyperplanes: int         # lam1 at the quadric stage
    crossover_q: int         # minimizing count of quadrics kept
    candidates: tuple[tuple[int, int], ...]  # (q, candidate value) examined
    bound: int               # the minimum candidate value
    mode: SemanticsMode


def optimal_reduction_bound(m: int, d: int,
                            mode: SemanticsMode) -> ReductionReport:
    """Minimize the reduction candidate over the number of quadrics kept.

    The exponential branch increases and the linear branch decreases in q,
    so the pointwise max is unimodal; the crossover (smallest q where the
    exponential wins) is located by doubling then binary search comparing
    bit lengths, and only the candidates around it are evaluated.  2^q is
    never formed for q beyond the linear branch's bit length.  Ties in the
    minimum break toward larger q (fewer quadrics, lower solving degree).
    """
    if d < 3:
        raise DomainError("optimal reduction bound needs d >= 3")
    if m < d + 2:
        raise DomainError("need m >= d + 2")
    lam2, lam1 = reduce_to_quadric_stage(d, m, SemanticsMode.CORRECTED)
    if lam2 == 0:
        raise DomainError(
            f"(m={m}, d={d}) has no quadric stage (lam2 = 0); "
            "the reduction bound is undefined without quadrics to keep")

    def dominated(q: int) -> bool:
        return _exp_dominates(m, d, q, lam2, lam1, mode)

    if dominated(1):
        crossover = 1
    elif not dominated(lam2):
        crossover = lam2  # exponential never catches up in range
    else:
        lo, hi = 1, 2
        while hi < lam2 and not dominated(hi):
            lo, hi = hi, min(2 * hi, lam2)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if dominated(mid):
                hi = mid
            else:
                lo = mid
        crossover = hi

    qs = sorted({q for q in (crossover - 1, crossover, crossover + 1)
                 if 1 <= q <= lam2})
    candidates = tuple(
        (q, reduction_candidate(m, d, q, lam2, lam1, mode)) for q in qs)
    best_q, best = candidates[0]
    for q, value in candidates[1:]:
        if value <= best:
            best_q, best = q, value
    return ReductionReport(m=m, d=d, quadrics=lam2, hyperplanes=lam1,
                           crossover_q=best_q, candidates=candidates,
                           bound=best, mode=mode)


def optimal_reduction_floor(m: int, d: int) -> int:
    """Provable lower bound ceil(4 ((m-d-1)/2)^(2d-4)) for the optimal
    reduction bound, exact in integer arithmetic."""
    if d < 4:
        raise DomainError("the lower bound needs d >= 4")
    if m < d + 2:
        raise DomainError("need m >= d + 2")
    e = 2 * d - 4
    return -((-4 * (m - d - 1) ** e) // (1 << e))


def quadric_stage_floor(d: int, top_count: int) -> int:
    """Provable lower bound ceil(2^(5-2d) (top_count-1)^(2d-4)) on lam2 for
    a pure type of top_count degree-d hypersurfaces."""
    if d < 3:
        raise DomainError("the quadric stage floor needs d >= 3")
    if top_count < 2:
        raise DomainError("need at least two top-degree hypersurfaces")
    return -((-((top_count - 1) ** (2 * d - 4))) // (1 << (2 * d - 5)))
