"""Word predicates, profiles, and the brute-force enumerators."""

import itertools

import pytest

from ffdyck import words
from ffdyck.words import (
    CapExceeded,
    brute_enumerate_d,
    brute_enumerate_u,
    from_binary,
    is_dyck,
    is_factor_free,
    is_in_d,
    is_in_u,
    is_in_u_lattice,
    prefix_profile,
    to_binary,
    valuation,
)


def all_words(max_len: int):
    for length in range(max_len + 1):
        for tup in itertools.product("ab", repeat=length):
            yield "".join(tup)


def test_valuation():
    assert valuation("", 1) == 0
    assert valuation("abbab", 1) == 0
    assert valuation("aab", 1) == 4
    assert valuation("bbbbbbb", 2) == -14


def test_prefix_profile():
    assert prefix_profile("ab", 1) == [0, 3, 1]
    assert prefix_profile("", 2) == [0]
    assert prefix_profile("abbab", 1) == [0, 3, 1, -1, 2, 0]


def test_profile_steps_property():
    for m in (1, 2):
        for w in all_words(7):
            prof = prefix_profile(w, m)
            assert prof[0] == 0
            assert all(b - a in (2 * m + 1, -2) for a, b in zip(prof, prof[1:]))
            assert prof[-1] == valuation(w, m)


def test_is_dyck():
    assert is_dyck("aabbb", 1)
    assert not is_dyck("abbab", 1)  # prefix abb dips to -1
    assert is_dyck("", 2)


def test_is_factor_free():
    assert is_factor_free("aabbb", 1)
    assert not is_factor_free("aaabbbbb", 1)  # contains the Dyck factor aabbb
    assert is_factor_free("", 1)
    assert is_factor_free("a", 1) and is_factor_free("b", 1)


def test_factor_free_against_naive_scan():
    def naive(w, m):
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                if (i, j) == (0, len(w)):
                    continue
                if is_dyck(w[i:j], m):
                    return False
        return True

    for m in (1, 2):
        for w in all_words(9):
            assert is_factor_free(w, m) == naive(w, m), (w, m)


def test_is_in_d():
    assert is_in_d("aabbb", 1)
    assert is_in_d("ababb", 1)
    assert not is_in_d("aabbbaabbb", 1)
    assert is_in_d("", 1)


def test_is_in_u():
    assert is_in_u("abbab", 1)
    assert is_in_u("babbbab", 2)
    assert is_in_u("abbbbab", 2) and is_in_u("abbbabb", 2)
    assert not is_in_u("aabbb", 1)  # no negative prefix
    assert is_in_u("", 2)


def test_is_in_u_rejects_frame_straddling_suffixes():
    # valuation 0, inside the band, factor-free as a bare word, but a suffix
    # completes to a Dyck factor once the b^m frame is appended
    for w in ("baabbbb", "bababbb", "babbabb"):
        assert valuation(w, 2) == 0
        assert is_factor_free(w, 2)
        assert not is_in_u(w, 2)


def test_lattice_reading_agrees_with_membership():
    for m in (1, 2):
        for w in all_words(2 * m + 10):
            assert is_in_u(w, m) == is_in_u_lattice(w, m), (w, m)


def test_binary_rendering():
    assert to_binary("aabbb") == "00111"
    assert from_binary("01011") == "ababb"
    assert from_binary(to_binary("abbab")) == "abbab"


def test_brute_enumerate_u_examples():
    assert brute_enumerate_u(1, 1) == ["abbab"]
    assert brute_enumerate_u(1, 2) == ["aabbabbbab", "abbaabbabb"]
    assert brute_enumerate_u(2, 1) == ["abbbabb", "abbbbab", "babbbab"]


def test_brute_enumerate_d_examples():
    assert brute_enumerate_d(1, 1) == ["aabbb", "ababb"]
    assert len(brute_enumerate_d(1, 4)) == 19
    assert len(brute_enumerate_d(2, 2)) == 13


def test_brute_enumerators_match_naive_filter():
    # the pruned search must equal a dumb scan over all letter arrangements
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]:
        length = (2 * m + 3) * n
        n_a = 2 * n
        naive_u, naive_d = [], []
        for positions in itertools.combinations(range(length), n_a):
            letters = ["b"] * length
            for p in positions:
                letters[p] = "a"
            w = "".join(letters)
            if is_in_u(w, m):
                naive_u.append(w)
            if is_in_d(w, m):
                naive_d.append(w)
        assert brute_enumerate_u(m, n) == sorted(naive_u), (m, n)
        assert brute_enumerate_d(m, n) == sorted(naive_d), (m, n)


def test_enumerated_u_words_shape():
    for m, n in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]:
        for w in brute_enumerate_u(m, n):
            prof = prefix_profile(w, m)
            assert prof[-1] == 0
            assert -2 * m < min(prof) < 0
            assert is_factor_free(w, m)


def test_d_split_valuations():
    # every split of a nonempty D-word has positive head and negative tail
    for m, n in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]:
        for w in brute_enumerate_d(m, n):
            for cut in range(1, len(w)):
                assert valuation(w[:cut], m) > 0
                assert valuation(w[cut:], m) < 0


def test_trivial_enumerations():
    assert brute_enumerate_u(1, 0) == [""]
    assert brute_enumerate_d(1, 0) == []


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        brute_enumerate_u(1, 10, cap=1000)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv(words.BRUTE_CAP_ENV, "1")
    with pytest.raises(CapExceeded):
        brute_enumerate_u(1, 1)
    monkeypatch.delenv(words.BRUTE_CAP_ENV)
    assert brute_enumerate_u(1, 1) == ["abbab"]
