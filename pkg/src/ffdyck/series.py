"""Truncated formal power series with exact integer coefficients.

Used as an independent route to the word counts: the generating function of U
solves U = 1 + sum_{j=1}^m C(m+j, m-j) t^j U^{2j}, the generating function of
D evaluates as 1 + t U^2 + sum_{j=1}^m C(m+j-1, m-j) t^j U^{2j-1}, and the
one-letter-step system over the variable tau (one tau per letter) is

    L_{2m+1} = tau,  L_{2m} = tau^2 L_1,
    L_i = tau L_1 L_{i+1} + tau L_{i+2}   for 1 <= i <= 2m-1.

All solvers run plain fixed-point iteration: every right-hand side carries a
factor of the series variable, so each sweep settles one further coefficient.
The substitution t = tau^(2m+3) is the explicit `inflate` operation, never an
implicit reindexing.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .bell import binomial


class Series:
    """Power series truncated at a fixed order, with exact int coefficients.

    Binary operations require equal truncation orders; products discard all
    terms above the shared order and are exact below it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        cs = list(coeffs)
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs += [0] * (order + 1 - len(cs))
        elif not cs:
            cs = [0]
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: int = 1) -> "Series":
        cs = [0] * (order + 1)
        if 0 <= k <= order:
            cs[k] = coeff
        return cls(cs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)})"

    def _match(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: "Series") -> "Series":
        self._match(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._match(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            return Series([other * a for a in self.coeffs])
        self._match(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            raise ValueError("negative series powers are not supported")
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by the k-th power of the variable, same truncation order."""
        cs = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a and i + k <= self.order:
                cs[i + k] = a
        return Series(cs)

    def inflate(self, k: int, order: int) -> "Series":
        """Substitute variable -> variable**k, truncating at the given order."""
        cs = [0] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if a and i * k <= order:
                cs[i * k] = a
        return Series(cs)


def u_series(m: int, order: int) -> Series:
    """Counting series of U in t (one t per 2m+3 letters), to the given order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    one = Series.one(order)
    weights = [(j, binomial(m + j, m - j)) for j in range(1, m + 1)]
    u = one
    for _ in range(order):
        acc = one
        for j, w in weights:
            acc = acc + (u ** (2 * j)).shift(j) * w
        u = acc
    return u


def d_series(m: int, order: int) -> Series:
    """Counting series of D in t, evaluated from the U series."""
    u = u_series(m, order)
    acc = Series.one(order) + (u * u).shift(1)
    for j in range(1, m + 1):
        acc = acc + (u ** (2 * j - 1)).shift(j) * binomial(m + j - 1, m - j)
    return acc


def l_series(m: int, i: int, order: int) -> Series:
    """Series in tau of the i-th one-letter-step language, 1 <= i <= 2m+1."""
    if not 1 <= i <= 2 * m + 1:
        raise ValueError(f"index i must lie in 1..{2 * m + 1}, got {i}")
    tau = Series.monomial(1, order)
    ls: dict[int, Series] = {k: Series.zero(order) for k in range(1, 2 * m + 2)}
    for _ in range(order + 1):
        new = {2 * m + 1: tau, 2 * m: tau * tau * ls[1]}
        for k in range(1, 2 * m):
            new[k] = tau * ls[1] * ls[k + 1] + tau * ls[k + 2]
        ls = new
    return ls[i]
