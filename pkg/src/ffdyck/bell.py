"""Exact integer combinatorics: binomial coefficients and partial Bell polynomials.

Everything here is plain Python integer arithmetic, so all results are exact
at any size.  The partial (exponential) Bell polynomial B_{n,k}(x_1, x_2, ...)
sums over the set partitions of an n-element set into k blocks, each block of
size j contributing a factor x_j.  Argument sequences are 1-based: xs[0] is
x_1, and entries past the end of the sequence read as zero.
"""

from __future__ import annotations

import math
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def bell_partial(n: int, k: int, xs: Sequence[int]) -> int:
    """Partial Bell polynomial B_{n,k}(x_1, x_2, ...).

    Computed via the recurrence

        B_{n,k} = sum_{j>=1} C(n-1, j-1) * x_j * B_{n-j, k-1},

    with B_{0,0} = 1 and B_{n,0} = B_{0,k} = 0 for n, k >= 1.  The memo table
    is local to the call, so different argument sequences never interfere.
    """
    if n < 0 or k < 0:
        return 0

    def x(j: int) -> int:
        return xs[j - 1] if j <= len(xs) else 0

    memo: dict[tuple[int, int], int] = {}

    def rec(nn: int, kk: int) -> int:
        if nn == 0:
            return 1 if kk == 0 else 0
        if kk == 0:
            return 0
        key = (nn, kk)
        val = memo.get(key)
        if val is None:
            val = sum(
                math.comb(nn - 1, j - 1) * x(j) * rec(nn - j, kk - 1)
                for j in range(1, nn - kk + 2)
            )
            memo[key] = val
        return val

    return rec(n, k)
