"""Core algebra on multidegree types.

A system of homogeneous equations is summarized by its *multidegree*: the
vector of hypersurface counts per degree, written descending.  We encode it
as a tuple whose length is the top degree, so ``(l_d, ..., l_2, l_1)`` has
``l_d`` hypersurfaces of degree d down to ``l_1`` hyperplanes.  ``(2, 0, 5)``
therefore means two cubics and five hyperplanes.

The operations here are the building blocks of the obliteration calculus:
the polar-cone map (a prefix sum at type level), the Sylvester reduction
step that trades one top-degree hypersurface for lower-degree ones, full
obliteration of the top degree, the resulting ambient-dimension bound, and
the closed forms that shortcut the loops for quadrics, cubics and quartics.

Two arithmetic variants exist because the published closed forms disagree
with the reference loop in two places (see SemanticsMode).  CORRECTED always
agrees with the loop; AS_PUBLISHED keeps the printed formulas verbatim.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, Sequence

from .arith import DomainError, MalformedTypeError, exact_div

Multidegree = tuple[int, ...]

# Above this top count, one full obliteration level switches from the
# step-by-step loop to the equivalent binomial closed form (see
# _obliterate_level_closed).  Both paths are cross-checked by the suite.
_LOOP_CUTOFF = 64


class SemanticsMode(enum.Enum):
    """Selector between the two arithmetic variants.

    CORRECTED agrees with the reference loop on every input and is the
    ground truth of this package.  AS_PUBLISHED reproduces the printed
    closed-form algorithms verbatim, divergences included: its quadric
    bound exceeds the loop's by exactly 1, and its quartic middle count
    exceeds the loop's by exactly the quartic count.
    """

    CORRECTED = "corrected"
    AS_PUBLISHED = "published"


def as_multidegree(counts: Iterable[int]) -> Multidegree:
    """Validate and freeze a multidegree (length >= 1, entries >= 0)."""
    t = tuple(counts)
    if not t:
        raise MalformedTypeError("a multidegree needs at least one slot")
    for c in t:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise MalformedTypeError(f"counts must be nonnegative ints, got {c!r}")
    return t


def require_canonical(counts: Iterable[int]) -> Multidegree:
    """As as_multidegree, but the top degree must actually be present."""
    t = as_multidegree(counts)
    if t[0] == 0:
        raise MalformedTypeError("canonical multidegree needs a nonzero top count")
    return t


def polar_cone_type(t: Sequence[int]) -> Multidegree:
    """Type of a polar cone: the running prefix sums of the counts.

    Every defining hypersurface of degree > d' contributes exactly one
    degree-d' hypersurface to the polar cone, so slot k of the output is
    the sum of slots 0..k of the input.
    """
    t = as_multidegree(t)
    out = []
    c = 0
    for x in t:
        c += x
        out.append(c)
    return tuple(out)


def add_hyperplanes(t: Sequence[int], c: int) -> Multidegree:
    """Add c hyperplanes: increase the last (degree-1) slot by c."""
    t = as_multidegree(t)
    if c < 0:
        raise DomainError("hyperplane count must be nonnegative")
    return t[:-1] + (t[-1] + c,)


def partial_sylvester_step(t: Sequence[int]) -> Multidegree:
    """One partial Sylvester reduction: drop one top-degree hypersurface,
    pass to the polar cone of the rest, and cut with a fresh hyperplane.

    For a two-slot type (a, b) this is (a-1, a+b).
    """
    t = as_multidegree(t)
    if t[0] < 1:
        raise DomainError("partial Sylvester step needs a nonzero top count")
    return add_hyperplanes(polar_cone_type((t[0] - 1,) + t[1:]), 1)


def _obliterate_level_closed(t: Multidegree) -> Multidegree:
    # partial_sylvester_step is the affine map  t <- P(t - e_top) + e_last
    # with P the prefix-sum matrix, so after k = t[0] steps
    #   t_k[i] = sum_j C(k-1+i-j, i-j) t[j] - C(k+i, i+1) + k*[i == last].
    k = t[0]
    n = len(t)
    out = []
    for i in range(1, n):
        s = sum(math.comb(k - 1 + i - j, i - j) * t[j] for j in range(i + 1))
        s -= math.comb(k + i, i + 1)
        if i == n - 1:
            s += k
        out.append(s)
    return tuple(out)


def obliterate_top_degree(t: Sequence[int]) -> Multidegree:
    """Obliterate the top degree: iterate partial Sylvester steps until the
    top count reaches zero, then drop the exhausted slot.

    The output is one slot shorter.  The associated dimension bound is
    unchanged by this operation, which is what makes the calculus work.
    Large top counts take a closed-form shortcut equivalent to the loop.
    """
    t = as_multidegree(t)
    if len(t) < 2:
        raise DomainError("cannot obliterate a pure-linear type")
    if t[0] > _LOOP_CUTOFF:
        return _obliterate_level_closed(t)
    while t[0] > 0:
        t = partial_sylvester_step(t)
    return t[1:]


def dimension_bound(t: Sequence[int]) -> int:
    """Ambient-dimension bound for finding a point of a system of the given
    type by solving polynomials of at most its top degree.

    Computed by full obliteration down to the quadric stage (a, b), then
    reducing quadrics until one remains and counting the hyperplanes.  On
    two-slot types this equals the closed form b + a(a+1)/2.
    """
    t = require_canonical(t)
    if len(t) == 1:
        return t[0]
    while len(t) > 2:
        t = obliterate_top_degree(t)
    a, b = t
    if a > _LOOP_CUTOFF:
        # the loop below adds a + (a-1) + ... + 2 to b
        return 1 + b + (a * (a + 1) // 2 - 1)
    while a > 1:
        a, b = a - 1, a + b
    return a + b


def quadrics_closed(l2: int, l1: int, mode: SemanticsMode) -> int:
    """Closed form for the dimension bound of (l2 quadrics, l1 hyperplanes).

    CORRECTED equals dimension_bound((l2, l1)); AS_PUBLISHED is the printed
    variant, larger by exactly 1.
    """
    if l2 < 1:
        raise DomainError("need at least one quadric")
    if l1 < 0:
        raise DomainError("hyperplane count must be nonnegative")
    if mode is SemanticsMode.AS_PUBLISHED:
        return 1 + l1 + exact_div(l2 * (l2 + 1), 2)
    return 1 + l1 + exact_div((l2 - 1) * (l2 + 2), 2)


def cubics_closed(l3: int, l2: int, l1: int) -> Multidegree:
    """Closed form for one obliteration level of (l3, l2, l1); top degree 3.

    Equals obliterate_top_degree((l3, l2, l1)).  Unlike the quadric and
    quartic forms, the printed cubic formulas agree with the loop, so there
    is no mode parameter.
    """
    if l3 < 1:
        raise DomainError("need at least one cubic")
    if l2 < 0 or l1 < 0:
        raise DomainError("counts must be nonnegative")
    b3 = l2 + exact_div((l3 - 1) * l3, 2)
    a3 = (l1 + l2 * l3
          + exact_div(l3 * (l3 + 1), 2)
          + exact_div(l3 * (2 * l3 * l3 - 3 * l3 + 1), 6))
    return (b3, a3)


def quartics_closed(l4: int, l3: int, l2: int, l1: int,
                    mode: SemanticsMode) -> Multidegree:
    """Closed form for one obliteration level of (l4, l3, l2, l1).

    CORRECTED equals obliterate_top_degree((l4, l3, l2, l1)); its middle
    count uses (l4-1)l4/2 where the printed variant has l4(l4+1)/2, so
    AS_PUBLISHED differs by +l4 in that slot.  The last count keeps the
    printed algorithm's l3(l4-1)/2 term in both modes; that is the variant
    the loop confirms.
    """
    if l4 < 1:
        raise DomainError("need at least one quartic")
    if l3 < 0 or l2 < 0 or l1 < 0:
        raise DomainError("counts must be nonnegative")
    g4 = l3 + exact_div((l4 - 1) * l4, 2)
    b4 = (l2 + l3 * l4
          + exact_div((l4 - 1) * l4, 2)
          + exact_div(l4 * (2 * l4 * l4 - 3 * l4 + 1), 6))
    if mode is SemanticsMode.AS_PUBLISHED:
        b4 += l4
    a4 = (l1 + l4 * (l2 + l3) + exact_div(l4 * (l4 + 1), 2)
          + exact_div(l4 * l3 * (l4 - 1), 2)
          + exact_div(l4 * (2 * l4 * l4 - 3 * l4 + 1), 3)
          + exact_div((l4 - 2) * (l4 - 1) * l4 * (3 * l4 - 1), 24))
    return (g4, b4, a4)
