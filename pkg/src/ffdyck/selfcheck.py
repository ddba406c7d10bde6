"""Cross-module invariant suite behind the `selfcheck` CLI command.

Each check is a plain function raising AssertionError with a descriptive
message on the first violated instance.  The quick level trims every range
to n <= 2 (or the equivalent); the full level runs the complete verification
ranges.  All checks are deterministic.
"""

from __future__ import annotations

import itertools
import time
from math import comb, factorial
from typing import Callable

from . import codes, counting, grammar, series, trees, words
from .bell import bell_partial, binomial

BRUTE_RANGES_FULL = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
BRUTE_RANGES_QUICK = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]


def _stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by their own recurrence."""
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def check_binomial_pascal(level: str) -> None:
    top = 64 if level == "full" else 16
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            lhs = binomial(n, k)
            rhs = binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert lhs == rhs, f"Pascal rule fails at C({n},{k})"
    assert binomial(3, 5) == 0 and binomial(3, -1) == 0


def check_bell_stirling(level: str) -> None:
    top = 12 if level == "full" else 8
    ones = [1] * top
    for n in range(top + 1):
        for k in range(n + 1):
            got = bell_partial(n, k, ones)
            want = _stirling2(n, k)
            assert got == want, f"B({n},{k})(1,1,...) = {got} != S({n},{k}) = {want}"


def check_bell_two_argument(level: str) -> None:
    top = 12 if level == "full" else 8
    for c1, c2 in [(1, 1), (2, 3)]:
        xs = [c1, 2 * c2] + [0] * (top - 2)
        for n in range(top + 1):
            for j in range((n + 1) // 2, n + 1):
                got = bell_partial(n, j, xs)
                want = (
                    factorial(n)
                    // factorial(j)
                    * comb(j, n - j)
                    * c1 ** (2 * j - n)
                    * c2 ** (n - j)
                )
                assert got == want, (
                    f"two-argument Bell identity fails at n={n}, j={j}, c=({c1},{c2})"
                )


def check_bell_convolution(level: str) -> None:
    top = 10 if level == "full" else 6
    for m in (1, 2, 3):
        zs = [factorial(j) * counting.ascent_weight(m, j) for j in range(1, top + 1)]
        for n in range(1, top + 1):
            for k in range(n):
                lhs = bell_partial(n, k + 1, zs)
                rhs = sum(
                    comb(n - 1, ell) * zs[n - ell - 1] * bell_partial(ell, k, zs)
                    for ell in range(k, n)
                )
                assert lhs == rhs, f"Bell convolution fails at m={m}, n={n}, k={k}"


def check_three_way_u_counts(level: str) -> None:
    top = 20 if level == "full" else 2
    for m in (1, 2, 3):
        useries = series.u_series(m, top)
        for n in range(top + 1):
            a = counting.count_u(m, n)
            b = useries[n]
            c = counting.count_colored_dyck(m, n)
            assert a == b == c, (
                f"count_u vs series vs colored disagree at m={m}, n={n}: {a}, {b}, {c}"
            )


def check_d_counts_vs_series(level: str) -> None:
    top = 20 if level == "full" else 2
    for m in (1, 2, 3):
        dseries = series.d_series(m, top)
        for n in range(top + 1):
            a = counting.count_d(m, n)
            b = dseries[n]
            assert a == b, f"count_d vs d_series disagree at m={m}, n={n}: {a} != {b}"


def check_slope52_simplification(level: str) -> None:
    top = 20 if level == "full" else 2
    for n in range(1, top + 1):
        a = counting.count_u_slope52(n)
        b = counting.count_u(2, n)
        assert a == b, f"slope-5/2 closed form disagrees at n={n}: {a} != {b}"


def check_catalan_closed_forms(level: str) -> None:
    top = 15 if level == "full" else 2
    catalan = [comb(2 * n, n) // (n + 1) for n in range(top + 1)]
    for n in range(1, top + 1):
        assert counting.count_u(1, n) == catalan[n], f"count_u(1,{n}) != Catalan"
        assert counting.count_d(1, n) == catalan[n] + catalan[n - 1], (
            f"count_d(1,{n}) != C_n + C_(n-1)"
        )


def check_l_series_closed_relations(level: str) -> None:
    order = 40 if level == "full" else 15
    for m in (1, 2, 3):
        l1 = series.l_series(m, 1, order)
        rhs1 = series.Series.zero(order)
        for j in range(m + 1):
            rhs1 = rhs1 + (l1 ** (2 * j)).shift(j + m + 1) * binomial(m + j, m - j)
        assert l1 == rhs1, f"L_1 closed relation fails for m={m}"
        l2 = series.l_series(m, 2, order)
        rhs2 = series.Series.zero(order)
        for j in range(m):
            rhs2 = rhs2 + (l1 ** (2 * j + 1)).shift(j + m + 1) * binomial(
                m + j, m - j - 1
            )
        assert l2 == rhs2, f"L_2 closed relation fails for m={m}"


def check_l1_factorization(level: str) -> None:
    order = 40 if level == "full" else 15
    for m in (1, 2, 3):
        per = 2 * m + 3
        l1 = series.l_series(m, 1, order)
        u = series.u_series(m, order // per + 1)
        expected = u.inflate(per, order).shift(m + 1)
        assert l1 == expected, f"L_1 != tau^(m+1) * U(tau^(2m+3)) for m={m}"


def check_u_functional_equation(level: str) -> None:
    order = 30 if level == "full" else 10
    for m in (1, 2, 3):
        u = series.u_series(m, order)
        rhs = series.Series.one(order)
        for j in range(1, m + 1):
            rhs = rhs + (u ** (2 * j)).shift(j) * binomial(m + j, m - j)
        assert u == rhs, f"U series does not satisfy its functional equation, m={m}"
    u1 = series.u_series(1, order)
    assert u1 == series.Series.one(order) + (u1 * u1).shift(1)
    d1 = series.d_series(1, order)
    assert d1 == u1 + u1.shift(1), "m=1: D != (1+t) U"


def _brute_ranges(level: str) -> list[tuple[int, int]]:
    return BRUTE_RANGES_FULL if level == "full" else BRUTE_RANGES_QUICK


def check_brute_counts(level: str) -> None:
    for m, n in _brute_ranges(level):
        got_u = len(words.brute_enumerate_u(m, n))
        want_u = counting.count_u(m, n)
        assert got_u == want_u, f"count_u vs brute m={m} n={n}: {want_u} != {got_u}"
        got_d = len(words.brute_enumerate_d(m, n))
        want_d = counting.count_d(m, n)
        assert got_d == want_d, f"count_d vs brute m={m} n={n}: {want_d} != {got_d}"


def check_grammar_vs_brute(level: str) -> None:
    for m, n in _brute_ranges(level):
        gu = grammar.generate_u_words(m, n)
        bu = words.brute_enumerate_u(m, n)
        assert gu == bu, f"grammar vs brute U words differ at m={m}, n={n}"
        gd = grammar.generate_d_words(m, n)
        bd = words.brute_enumerate_d(m, n)
        assert gd == bd, f"grammar vs brute D words differ at m={m}, n={n}"


def check_unambiguity_counts(level: str) -> None:
    for m, n in _brute_ranges(level):
        gu = grammar.generate_u_words(m, n)
        assert len(gu) == counting.count_u(m, n), (
            f"U grammar expansion count off at m={m}, n={n} (duplicate derivations?)"
        )
        assert len(set(gu)) == len(gu), f"duplicate U derivations at m={m}, n={n}"
        gd = grammar.generate_d_words(m, n)
        assert len(gd) == counting.count_d(m, n), (
            f"D grammar expansion count off at m={m}, n={n} (duplicate derivations?)"
        )
        assert len(set(gd)) == len(gd), f"duplicate D derivations at m={m}, n={n}"


def check_primitive_blocks(level: str) -> None:
    tops = {1: 1, 2: 2, 3: 3} if level == "full" else {1: 1, 2: 2}
    for m, jtop in tops.items():
        for j in range(1, jtop + 1):
            got = grammar.primitive_u_words(m, j)
            want = counting.ascent_weight(m, j)
            assert len(got) == want, (
                f"primitive word count at m={m}, j={j}: {len(got)} != {want}"
            )
    assert grammar.primitive_u_words(2, 1) == ["abbbabb", "abbbbab", "babbbab"]
    assert grammar.primitive_u_words(2, 2) == ["abbbabbbabbbab"]


def check_u_word_shape(level: str) -> None:
    for m, n in _brute_ranges(level):
        for w in words.brute_enumerate_u(m, n):
            prof = words.prefix_profile(w, m)
            assert prof[-1] == 0, f"U word with nonzero valuation: {w}"
            assert -2 * m < min(prof) < 0, f"U word out of the prefix band: {w}"
            assert words.is_factor_free(w, m), f"U word with a Dyck factor: {w}"


def check_lattice_reading(level: str) -> None:
    for m in (1, 2):
        top = 2 * m + 10 if level == "full" else 2 * m + 5
        for length in range(top + 1):
            for tup in itertools.product("ab", repeat=length):
                w = "".join(tup)
                assert words.is_in_u(w, m) == words.is_in_u_lattice(w, m), (
                    f"lattice reading disagrees on {w!r} at m={m}"
                )


def check_tree_roundtrip_words(level: str) -> None:
    top = 3 if level == "full" else 2
    for n in range(1, top + 1):
        for w in grammar.generate_u_words(2, n):
            t = trees.word_to_tree(w)
            assert t.edge_count == 2 * n, f"tree of {w} has {t.edge_count} edges"
            back = trees.tree_to_word(t)
            assert back == w, f"word round-trip failed: {w} -> {back}"


def check_tree_roundtrip_trees(level: str) -> None:
    top = 3 if level == "full" else 2
    for n in range(1, top + 1):
        for t in trees.enumerate_trees(n):
            w = trees.tree_to_word(t)
            assert words.is_in_u(w, 2), f"tree decoded to a non-U word: {w}"
            back = trees.word_to_tree(w)
            assert back == t, f"tree round-trip failed for {t.canonical()}"


def check_tree_counts(level: str) -> None:
    top = 4 if level == "full" else 2
    for n in range(1, top + 1):
        got = len(trees.enumerate_trees(n))
        want = counting.count_u(2, n)
        assert got == want, f"tree count at n={n}: {got} != {want}"


def check_cross_bifix_codes(level: str) -> None:
    plans = [(1, 4), (2, 3)] if level == "full" else [(1, 2), (2, 1)]
    for m, n_max in plans:
        code = codes.build_code(m, n_max)
        per_length = code.lengths
        for n in range(1, n_max + 1):
            length = (2 * m + 3) * n
            want = counting.count_d(m, n)
            assert per_length.get(length, 0) == want, (
                f"code size at m={m}, length={length}: {per_length.get(length, 0)} != {want}"
            )
        ok, violation = codes.verify_cross_bifix_free(list(code.words))
        assert ok, f"cross-bifix violation in code m={m}: {violation}"
        for cw in code.words:
            w = words.from_binary(cw)
            for cut in range(1, len(w)):
                left = words.valuation(w[:cut], m)
                right = words.valuation(w[cut:], m)
                assert left > 0 > right, (
                    f"split valuation violated for {cw} at {cut}: {left}, {right}"
                )


CHECKS: list[tuple[str, Callable[[str], None]]] = [
    ("binomial-pascal", check_binomial_pascal),
    ("bell-stirling", check_bell_stirling),
    ("bell-two-argument", check_bell_two_argument),
    ("bell-convolution", check_bell_convolution),
    ("three-way-u-counts", check_three_way_u_counts),
    ("d-counts-vs-series", check_d_counts_vs_series),
    ("slope52-simplification", check_slope52_simplification),
    ("catalan-closed-forms", check_catalan_closed_forms),
    ("l-series-closed-relations", check_l_series_closed_relations),
    ("l1-factorization", check_l1_factorization),
    ("u-functional-equation", check_u_functional_equation),
    ("brute-counts", check_brute_counts),
    ("grammar-vs-brute", check_grammar_vs_brute),
    ("unambiguity-counts", check_unambiguity_counts),
    ("primitive-blocks", check_primitive_blocks),
    ("u-word-shape", check_u_word_shape),
    ("lattice-reading", check_lattice_reading),
    ("tree-roundtrip-words", check_tree_roundtrip_words),
    ("tree-roundtrip-trees", check_tree_roundtrip_trees),
    ("tree-counts", check_tree_counts),
    ("cross-bifix-codes", check_cross_bifix_codes),
]


def run(level: str = "quick", emit: Callable[[str], None] = print) -> bool:
    """Run every check at the given level; report one line per check."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown selfcheck level {level!r}")
    all_ok = True
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            fn(level)
        except AssertionError as exc:
            all_ok = False
            emit(f"FAIL {name}: {exc}")
        else:
            emit(f"PASS {name} ({time.perf_counter() - start:.2f}s)")
    emit(f"selfcheck {level}: {'all checks passed' if all_ok else 'FAILURES detected'}")
    return all_ok
