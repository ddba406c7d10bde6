"""Acceptance gate: every release criterion, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  All arithmetic is exact, so every comparison is plain equality; the
stated wall-clock budgets are asserted alongside.
"""

import json
import subprocess
import sys
import time
from math import comb
from pathlib import Path

from ffdyck.cli import main as cli_main
from ffdyck.codes import build_code, verify_cross_bifix_free
from ffdyck.counting import count_colored_dyck, count_d, count_u
from ffdyck.grammar import generate_u_words, primitive_u_words
from ffdyck.series import Series, d_series, l_series, u_series
from ffdyck.trees import enumerate_trees, tree_to_word, word_to_tree
from ffdyck.words import brute_enumerate_d, brute_enumerate_u, from_binary, valuation
from ffdyck.bell import binomial

DATA = Path(__file__).parent / "data"


class criterion:
    """Times a criterion body, prints its pass/fail line, enforces the budget."""

    def __init__(self, label: str, budget: float | None = None):
        self.label = label
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"{status}: {self.label} ({elapsed:.2f}s)")
        if exc_type is None and self.budget is not None:
            assert elapsed < self.budget, (
                f"{self.label}: took {elapsed:.2f}s, budget {self.budget}s"
            )
        return False


def test_criterion_1_catalan_specialization():
    with criterion("1 slope-3/2 counts are Catalan and Catalan sums", budget=1.0):
        catalan = [comb(2 * n, n) // (n + 1) for n in range(11)]
        assert [count_u(1, n) for n in range(1, 11)] == [
            1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
        ]
        for n in range(1, 11):
            assert count_d(1, n) == catalan[n] + catalan[n - 1]


def test_criterion_2_slope52_sequences():
    with criterion("2 slope-5/2 U and D sequences", budget=1.0):
        assert [count_u(2, n) for n in range(1, 8)] == [
            3, 19, 153, 1390, 13581, 139315, 1479855,
        ]
        assert [count_d(2, n) for n in range(1, 8)] == [
            3, 13, 94, 810, 7667, 76998, 805560,
        ]


def test_criterion_3_three_way_oracle_agreement():
    with criterion("3 Bell = series = colored DP, and D vs series", budget=10.0):
        for m in (1, 2, 3):
            u_coeffs = u_series(m, 20)
            d_coeffs = d_series(m, 20)
            for n in range(21):
                bell_value = count_u(m, n)
                assert bell_value == u_coeffs[n] == count_colored_dyck(m, n), (m, n)
                assert count_d(m, n) == d_coeffs[n], (m, n)


def test_criterion_4_brute_force_ground_truth():
    with criterion("4 brute-force counts match closed forms", budget=60.0):
        for m, n in [
            (1, 1), (1, 2), (1, 3), (1, 4),
            (2, 1), (2, 2), (2, 3),
            (3, 1), (3, 2),
        ]:
            assert len(brute_enumerate_u(m, n)) == count_u(m, n), (m, n)
            assert len(brute_enumerate_d(m, n)) == count_d(m, n), (m, n)


def test_criterion_5_exact_word_listings(capsys):
    listings: dict[int, list[str]] = {}
    for n in (1, 2, 3, 4):
        code = cli_main(
            ["generate", "--m", "1", "--n", str(n), "--language", "D",
             "--alphabet", "01"]
        )
        out = capsys.readouterr().out
        assert code == 0
        listings[5 * n] = out.split()
    with capsys.disabled():
        with criterion("5 slope-3/2 D listings reproduced bit-exactly"):
            reference = {
                int(k): set(v)
                for k, v in json.loads(
                    (DATA / "slope32_reference_words.json").read_text()
                ).items()
            }
            sizes = {5: 2, 10: 3, 15: 7, 20: 19}
            for length, got in listings.items():
                assert len(got) == sizes[length]
                assert set(got) == reference[length], length


def test_criterion_6_building_blocks():
    with criterion("6 primitive building blocks per slope"):
        assert len(primitive_u_words(1, 1)) == 1
        assert primitive_u_words(2, 1) == ["abbbabb", "abbbbab", "babbbab"]
        assert primitive_u_words(2, 2) == ["abbbabbbabbbab"]
        lens = [len(primitive_u_words(3, j)) for j in (1, 2, 3)]
        assert lens == [6, 5, 1]
        table = set((DATA / "slope72_building_blocks.txt").read_text().split())
        union = {
            w for j in (1, 2, 3) for w in primitive_u_words(3, j)
        }
        assert union == table


def test_criterion_7_tree_bijection():
    with criterion("7 slope-5/2 tree bijection round-trips", budget=10.0):
        total = 0
        for n in (1, 2, 3):
            for w in generate_u_words(2, n):
                tree = word_to_tree(w)
                assert tree_to_word(tree) == w
                total += 1
        assert total == 3 + 19 + 153 == 175
        for n in range(1, 5):
            assert len(enumerate_trees(n)) == count_u(2, n)
        ten_edge_word = "abbbbaabbbabbbaababbbabbbbabbbbbabb"
        tree = word_to_tree(ten_edge_word)
        assert tree.edge_count == 10
        assert tree_to_word(tree) == ten_edge_word


def test_criterion_8_cross_bifix_free():
    with criterion("8 codes are cross-bifix-free with split valuations", budget=5.0):
        code32 = build_code(1, 4)
        assert len(code32.words) == 31
        assert verify_cross_bifix_free(list(code32.words)) == (True, None)
        code52 = build_code(2, 3)
        assert verify_cross_bifix_free(list(code52.words)) == (True, None)
        for code in (code32, code52):
            for cw in code.words:
                w = from_binary(cw)
                for cut in range(1, len(w)):
                    assert valuation(w[:cut], code.m) > 0
                    assert valuation(w[cut:], code.m) < 0


def test_criterion_9_series_identities():
    with criterion("9 closed series relations to tau-order 40", budget=5.0):
        order = 40
        for m in (1, 2, 3):
            l1 = l_series(m, 1, order)
            rhs1 = Series.zero(order)
            for j in range(m + 1):
                rhs1 = rhs1 + (l1 ** (2 * j)).shift(j + m + 1) * binomial(
                    m + j, m - j
                )
            assert l1 == rhs1, m
            l2 = l_series(m, 2, order)
            rhs2 = Series.zero(order)
            for j in range(m):
                rhs2 = rhs2 + (l1 ** (2 * j + 1)).shift(j + m + 1) * binomial(
                    m + j, m - j - 1
                )
            assert l2 == rhs2, m
            per = 2 * m + 3
            inflated = u_series(m, order // per + 1).inflate(per, order).shift(m + 1)
            assert l1 == inflated, m


def test_criterion_10_full_selfcheck_command():
    with criterion("10 selfcheck --level full passes with zero failures"):
        result = subprocess.run(
            [sys.executable, "-m", "ffdyck", "selfcheck", "--level", "full"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0, result.stdout + result.stderr
        assert "FAIL" not in result.stdout
        assert "all checks passed" in result.stdout
