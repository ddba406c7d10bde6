"""Binomial and partial Bell polynomial kernel."""

from math import comb, factorial

from ffdyck.bell import bell_partial, binomial


def set_partitions(n: int, k: int):
    """All partitions of {1..n} into exactly k nonempty blocks (oracle helper)."""
    if n == 0:
        if k == 0:
            yield []
        return
    for rest in set_partitions(n - 1, k):
        for i in range(len(rest)):
            yield rest[:i] + [rest[i] + [n]] + rest[i + 1 :]
    if k >= 1:
        for rest in set_partitions(n - 1, k - 1):
            yield rest + [[n]]


def bell_by_partitions(n: int, k: int, xs) -> int:
    """Independent Bell polynomial oracle: sum over explicit set partitions."""
    total = 0
    for part in set_partitions(n, k):
        term = 1
        for block in part:
            j = len(block)
            term *= xs[j - 1] if j <= len(xs) else 0
        total += term
    return total


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(5, 1) == 5
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


def test_binomial_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_bell_edge_rows():
    assert bell_partial(0, 0, ()) == 1
    for n in range(1, 6):
        assert bell_partial(n, 0, (1, 1, 1, 1, 1)) == 0
    for k in range(1, 6):
        assert bell_partial(0, k, (1, 1, 1, 1, 1)) == 0


def test_bell_single_block_and_diagonal():
    # B_{n,1} = x_n and B_{n,n} = x_1^n
    assert bell_partial(3, 1, (7, 9, 11)) == 11
    assert bell_partial(3, 3, (2,)) == 8


def test_bell_example_against_partition_oracle():
    # frozen from the oracle: the 6 partitions of {1,2,3} into 2 blocks weigh
    # x_1*x_2 each, and x_2 = 2 here
    assert bell_by_partitions(3, 2, (1, 2, 0)) == 6
    assert bell_partial(3, 2, (1, 2, 0)) == 6


def test_bell_matches_partition_oracle():
    xs_pool = [(1, 1, 1, 1, 1, 1, 1), (1, 2, 0, 3, 0, 1, 2), (3, 2, 0, 0, 0, 0, 0)]
    for xs in xs_pool:
        for n in range(8):
            for k in range(n + 1):
                assert bell_partial(n, k, xs) == bell_by_partitions(n, k, xs), (
                    n,
                    k,
                    xs,
                )


def test_bell_arguments_past_sequence_end_read_zero():
    # (x_1,) behaves like (x_1, 0, 0, ...)
    for n in range(1, 7):
        for k in range(n + 1):
            assert bell_partial(n, k, (5,)) == bell_partial(n, k, (5, 0, 0, 0, 0, 0))


def stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_bell_at_ones_is_stirling():
    ones = [1] * 12
    for n in range(13):
        for k in range(n + 1):
            assert bell_partial(n, k, ones) == stirling2(n, k)


def test_bell_two_argument_identity():
    # B_{n,j}(c1, 2 c2, 0, ...) = n!/j! * C(j, n-j) * c1^(2j-n) * c2^(n-j)
    for c1, c2 in [(1, 1), (2, 3)]:
        xs = (c1, 2 * c2) + (0,) * 10
        for n in range(13):
            for j in range((n + 1) // 2, n + 1):
                expected = (
                    factorial(n)
                    // factorial(j)
                    * comb(j, n - j)
                    * c1 ** (2 * j - n)
                    * c2 ** (n - j)
                )
                assert bell_partial(n, j, xs) == expected


def test_bell_convolution_identity():
    # B_{n,k+1}(z) = sum_{l=k}^{n-1} C(n-1,l) z_{n-l} B_{l,k}(z)
    for m in (1, 2, 3):
        zs = [factorial(j) * comb(m + j, m - j) if j <= m else 0 for j in range(1, 11)]
        for n in range(1, 11):
            for k in range(n):
                rhs = sum(
                    comb(n - 1, ell) * zs[n - ell - 1] * bell_partial(ell, k, zs)
                    for ell in range(k, n)
                )
                assert bell_partial(n, k + 1, zs) == rhs


def test_bell_pure_function_of_inputs():
    # memoization must not leak between argument sequences
    a = bell_partial(6, 3, (1, 1, 1))
    b = bell_partial(6, 3, (2, 1, 1))
    assert a == bell_partial(6, 3, (1, 1, 1))
    assert a != b
