"""Closed-form exact counters for the languages U and D.

count_u evaluates the partial-Bell-polynomial formula

    u_n = sum_{k=1}^n C(2n, k-1) * (k-1)!/n! * B_{n,k}(1! w_1, 2! w_2, ...),

where w_j = C(m+j, m-j) is the ascent weight (zero past j = m).  count_d
assembles the D count from coefficients of odd powers of the U series, which
have their own closed Bell form.  count_colored_dyck is a deliberately
independent dynamic program over colored classical Dyck paths; it shares no
code with the Bell formula or the series solvers so it can serve as an
oracle for both.

Rational prefactors are evaluated as integer division with an exactness
check; an inexact division means a transcription bug, never bad input.
"""

from __future__ import annotations

from math import comb, factorial

from .bell import bell_partial


class NonIntegerResult(Exception):
    """An exact integer division in a counting formula failed to be exact."""


def _exact_div(num: int, den: int, context: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(f"{context}: {num} is not divisible by {den}")
    return q


def ascent_weight(m: int, j: int) -> int:
    """Weight C(m+j, m-j) of a maximal 2j-ascent; zero for j > m.

    These are the coefficients of the functional equation of the U series and
    simultaneously the number of primitive words of length (2m+3)j.
    """
    if j < 0 or j > m:
        return 0
    return comb(m + j, m - j)


def _weighted_args(m: int, upto: int) -> list[int]:
    """Sequence j! * C(m+j, m-j) for j = 1..upto (Bell polynomial arguments)."""
    return [factorial(j) * ascent_weight(m, j) for j in range(1, upto + 1)]


def count_u(m: int, n: int) -> int:
    """Number of U-words of length (2m+3)n (1 for n = 0)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return 1
    xs = _weighted_args(m, n)
    total = sum(
        comb(2 * n, k - 1) * factorial(k - 1) * bell_partial(n, k, xs)
        for k in range(1, n + 1)
    )
    return _exact_div(total, factorial(n), f"count_u(m={m}, n={n})")


def count_u_slope52(n: int) -> int:
    """Slope-5/2 specialization of count_u via its single-sum closed form.

    Evaluates (1/(2n+1)) * sum_{k=ceil(n/2)}^{n} C(2n+1, k) C(k, n-k) 3^(2k-n)
    and must agree with count_u(2, n).
    """
    total = sum(
        comb(2 * n + 1, k) * comb(k, n - k) * 3 ** (2 * k - n)
        for k in range((n + 1) // 2, n + 1)
    )
    return _exact_div(total, 2 * n + 1, f"count_u_slope52(n={n})")


def u_odd_power_coeff(m: int, nu: int, ell: int) -> int:
    """Coefficient of t^nu in the (2*ell+1)-st power of the U series.

    Closed form: (2l+1)/(2v+2l+1) * sum_{k=0}^{v} C(2v+2l+1, k) * k!/v! *
    B_{v,k}(1! w_1, 2! w_2, ...).  With B_{0,0} = 1 the value at nu = 0 is 1
    for every ell, as the constant term of any power of U must be.
    """
    if nu == 0:
        return 1
    xs = _weighted_args(m, nu)
    total = sum(
        comb(2 * nu + 2 * ell + 1, k) * factorial(k) * bell_partial(nu, k, xs)
        for k in range(nu + 1)
    )
    return _exact_div(
        (2 * ell + 1) * total,
        (2 * nu + 2 * ell + 1) * factorial(nu),
        f"u_odd_power_coeff(m={m}, nu={nu}, ell={ell})",
    )


def count_d(m: int, n: int) -> int:
    """Number of nonempty D-words of length (2m+3)n (1 for n = 0)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return 1
    return sum(
        comb(m + ell + 1, m - ell) * u_odd_power_coeff(m, n - ell - 1, ell)
        for ell in range(min(m, n - 1) + 1)
    )


def count_colored_dyck(m: int, n: int) -> int:
    """Colored-Dyck-path count of U-words, independent of the Bell formula.

    Counts classical Dyck paths of semilength 2n assembled from the blocks
    "d" and "u^(2j) d" for j = 1..m, where each maximal ascent of length 2j
    may be colored in C(m+j, m-j) ways.  Dynamic programming over (steps
    consumed, height); block boundaries keep ascent maximality implicit since
    every ascent block ends with a down step.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return 1
    steps = 4 * n
    weights = [comb(m + j, m - j) for j in range(m + 1)]
    table = [[0] * (steps + 1) for _ in range(steps + 1)]
    table[0][0] = 1
    for s in range(steps):
        row = table[s]
        for h in range(steps + 1):
            w = row[h]
            if not w:
                continue
            if h >= 1:
                table[s + 1][h - 1] += w
            for j in range(1, m + 1):
                s2 = s + 2 * j + 1
                h2 = h + 2 * j - 1
                if s2 <= steps and h2 <= steps:
                    table[s2][h2] += w * weights[j]
    return table[steps][0]
