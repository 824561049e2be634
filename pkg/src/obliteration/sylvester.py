"""Sylvester's classical obliteration bookkeeping via completed emanants.

This is a second, historically older way to remove the top degree from a
multidegree type.  Each step passes to the *completed emanant*: the system
of all polars at a solution, together with one extra hyperplane that avoids
it.  At type level, every slot below the top becomes a prefix sum that still
includes the removed top-degree forms, so the counts here grow faster than
under obliterate_top_degree; the two reductions are genuinely different
bookkeepings and must not be conflated (e.g. (2,0,0) gives (3,7) here but
(1,4) there).
"""

from __future__ import annotations

import math
from typing import Sequence

from .arith import DomainError, exact_div
from .typealgebra import Multidegree, as_multidegree, require_canonical


def emanant_step(t: Sequence[int]) -> Multidegree:
    """Type of the completed emanant after removing one top-degree form.

    The top count drops by one; every lower slot becomes the prefix sum of
    all counts of its degree and higher (top included); the linear slot
    additionally gains the completing hyperplane.
    """
    t = as_multidegree(t)
    if len(t) < 2:
        raise DomainError("emanant step needs at least two degree slots")
    if t[0] < 1:
        raise DomainError("emanant step needs a nonzero top count")
    out = [t[0] - 1]
    c = 0
    for k, x in enumerate(t):
        c += x
        if k >= 1:
            out.append(c)
    out[-1] += 1
    return tuple(out)


def sylvester_obliteration(t: Sequence[int]) -> Multidegree:
    """Closed form for removing the whole top degree by emanant steps.

    For input (l_d, l_{d-1}, ..., l_1) the output has one slot fewer, with

        out[d-j] = C(l_d + j - 1, j) * (j*l_d + 1)/(j + 1)
                   + sum_{v=0}^{j-1} C(l_d + v - 1, v) * l_{d-j+v}

    for j = 1..d-1, plus l_d extra hyperplanes on the linear slot.  The
    binomial-times-fraction product is exactly integral; a remainder raises.
    Equals iterating emanant_step l_d times and dropping the spent slot.
    """
    t = require_canonical(t)
    d = len(t)
    if d < 2:
        raise DomainError("need top degree at least 2 to obliterate")
    ld = t[0]
    out = []
    for j in range(1, d):
        lam = exact_div(math.comb(ld + j - 1, j) * (j * ld + 1), j + 1)
        lam += sum(math.comb(ld + v - 1, v) * t[j - v] for v in range(j))
        out.append(lam)
    out[-1] += ld
    return tuple(out)
