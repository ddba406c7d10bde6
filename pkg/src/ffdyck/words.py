"""Words over {a, b} with valuation h(a) = 2m+1, h(b) = -2 (slope (2m+1)/2).

A word is a generalized Dyck word if its total valuation is 0 and every
prefix valuation is >= 0.  It is factor-free if no nonempty proper contiguous
factor is itself a generalized Dyck word ("proper" meaning the factor is not
the whole word).  Two languages are exposed here:

  D: the factor-free Dyck words (plus the empty word), and
  U: the empty word together with the words w of total valuation 0 whose
     prefix valuations all stay strictly above -2m and for which the framed
     word a w b^m is factor-free.

The frame matters: a suffix of w that never dips below its own starting
level can borrow up to m closing b's from the frame to complete a Dyck
factor, so factor-freeness of w alone is too weak for m >= 2 (for m = 1 the
band condition already forbids such suffixes).  Framed factor-freeness also
forces some prefix of w to have negative valuation: otherwise w itself would
be a Dyck factor sitting inside the frame.

Nonempty words of either language have length a multiple of 2m+3, with
exactly 2n letters a and (2m+1)n letters b at length (2m+3)n.

Words are plain Python strings over the alphabet "ab"; an alternate binary
rendering maps a <-> 0, b <-> 1.  All word lists are sorted with a < b.
"""

from __future__ import annotations

import math
import os


DEFAULT_BRUTE_CAP = 10**7
BRUTE_CAP_ENV = "DYCK_BRUTE_CAP"


class CapExceeded(Exception):
    """The candidate space of a brute-force search exceeds the configured cap."""


def brute_cap(override: int | None = None) -> int:
    """Active brute-force candidate cap (override arg, else env var, else default)."""
    if override is not None:
        return override
    return int(os.environ.get(BRUTE_CAP_ENV, DEFAULT_BRUTE_CAP))


def period(m: int) -> int:
    """Common length unit 2m+3 of nonempty words in U and D."""
    return 2 * m + 3


def to_binary(word: str) -> str:
    """Render an ab-word in the binary alphabet (a -> 0, b -> 1)."""
    return word.translate(str.maketrans("ab", "01"))


def from_binary(word: str) -> str:
    """Read a binary word (0 -> a, 1 -> b) into the ab alphabet."""
    return word.translate(str.maketrans("01", "ab"))


def valuation(word: str, m: int) -> int:
    """Total valuation (#a)*(2m+1) - 2*(#b)."""
    return (2 * m + 1) * word.count("a") - 2 * word.count("b")


def prefix_profile(word: str, m: int) -> list[int]:
    """Valuations of all prefixes; entry i is the valuation of word[:i]."""
    rise = 2 * m + 1
    values = [0]
    h = 0
    for c in word:
        h += rise if c == "a" else -2
        values.append(h)
    return values


def is_dyck(word: str, m: int) -> bool:
    """Total valuation 0 and no prefix valuation below 0."""
    rise = 2 * m + 1
    h = 0
    for c in word:
        h += rise if c == "a" else -2
        if h < 0:
            return False
    return h == 0


def is_factor_free(word: str, m: int) -> bool:
    """No nonempty proper factor of the word is a generalized Dyck word.

    The factor word[i:j] is Dyck exactly when profile[j] == profile[i] and no
    profile value in between drops below profile[i]; the scan below walks j
    upward for each i, breaking as soon as the running minimum falls under
    profile[i] (no later j can recover).
    """
    prof = prefix_profile(word, m)
    n = len(word)
    for i in range(n):
        base = prof[i]
        for j in range(i + 1, n + 1):
            if prof[j] < base:
                break
            if prof[j] == base and not (i == 0 and j == n):
                return False
    return True


def is_in_d(word: str, m: int) -> bool:
    """Membership in D: factor-free generalized Dyck word (empty word included)."""
    return is_dyck(word, m) and is_factor_free(word, m)


def is_in_u(word: str, m: int) -> bool:
    """Membership in U.

    The empty word belongs to U; a nonempty word does iff it has total
    valuation 0, every prefix valuation stays strictly above -2m, some
    prefix valuation is negative, and the framed word a + word + b^m is
    factor-free.  The frame check subsumes factor-freeness of the word
    itself and additionally rejects words with a suffix that completes to a
    Dyck factor using 1..m of the closing b's.
    """
    if not word:
        return True
    prof = prefix_profile(word, m)
    if prof[-1] != 0:
        return False
    lo = min(prof)
    if not -2 * m < lo < 0:
        return False
    return is_factor_free("a" + word + "b" * m, m)


def is_in_u_lattice(word: str, m: int) -> bool:
    """Lattice-path reading of U membership, kept independent of is_in_u.

    Identify a with an east step and b with a north step.  A nonempty word
    is in U iff the resulting path from the origin ends on the main line
    y = ((2m+1)/2) x, touches a lattice point strictly above that line,
    stays strictly below the parallel line shifted up by m, admits no pair
    of lattice points on a common line of slope (2m+1)/2 with the subpath
    between them weakly below that line (other than the full path), and has
    no tail that runs weakly below the slope line through its own starting
    point while finishing strictly below it at an even east-step distance
    (such a tail closes into a Dyck factor once up to m north steps are
    appended).
    """
    if not word:
        return True
    pts = [(0, 0)]
    x = y = 0
    for c in word:
        if c == "a":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    rise = 2 * m + 1
    if 2 * y != rise * x:
        return False
    if not any(2 * yi > rise * xi for xi, yi in pts):
        return False
    if not all(2 * yi < rise * xi + 2 * m for xi, yi in pts):
        return False
    last = len(pts) - 1
    for i in range(last + 1):
        xi, yi = pts[i]
        for j in range(i + 1, last + 1):
            if (i, j) == (0, last):
                continue
            xj, yj = pts[j]
            if 2 * (yj - yi) != rise * (xj - xi):
                continue
            if all(
                2 * (yk - yi) <= rise * (xk - xi) for xk, yk in pts[i : j + 1]
            ):
                return False
    xe, ye = pts[last]
    for i in range(1, last):
        xi, yi = pts[i]
        if (xe - xi) % 2:
            continue
        if 2 * (ye - yi) >= rise * (xe - xi):
            continue
        if all(2 * (yk - yi) <= rise * (xk - xi) for xk, yk in pts[i:]):
            return False
    return True


def letter_counts(m: int, n: int) -> tuple[int, int]:
    """(#a, #b) of any valuation-0 word of length (2m+3)n."""
    return 2 * n, (2 * m + 1) * n


def _check_cap(length: int, n_a: int, cap: int | None) -> None:
    if math.comb(length, n_a) > brute_cap(cap):
        raise CapExceeded(
            f"C({length},{n_a}) = {math.comb(length, n_a)} candidates "
            f"exceed the brute-force cap {brute_cap(cap)}"
        )


def _ends_dyck_factor(prof: list[int]) -> bool:
    """Does some factor ending at the last profile position have Dyck shape?"""
    j = len(prof) - 1
    top = prof[j]
    mn = top
    for i in range(j - 1, -1, -1):
        mn = min(mn, prof[i])
        if mn < top:
            return False
        if prof[i] == top:
            return True
    return False


def _brute_enumerate(m: int, n: int, dyck_mode: bool, cap: int | None) -> list[str]:
    """Depth-first search over {a,b} words of length (2m+3)n.

    Prunes prefixes that leave the admissible valuation band (>= 0 in Dyck
    mode, > -2m in U mode) or that already contain a nonempty Dyck factor
    ending at the current position; such a factor is proper in any completed
    word extending the prefix.  Every surviving candidate is re-checked with
    the full membership predicate before being emitted.
    """
    if n == 0:
        return [] if dyck_mode else [""]
    length = period(m) * n
    n_a, n_b = letter_counts(m, n)
    _check_cap(length, n_a, cap)
    rise = 2 * m + 1
    floor = 0 if dyck_mode else 1 - 2 * m
    accept = is_in_d if dyck_mode else is_in_u

    out: list[str] = []
    letters: list[str] = []
    prof = [0]

    def extend(c: str, rem_a: int, rem_b: int) -> None:
        h = prof[-1] + (rise if c == "a" else -2)
        if h < floor:
            return
        letters.append(c)
        prof.append(h)
        if len(letters) == length or not _ends_dyck_factor(prof):
            walk(rem_a, rem_b)
        letters.pop()
        prof.pop()

    def walk(rem_a: int, rem_b: int) -> None:
        if rem_a == 0 and rem_b == 0:
            word = "".join(letters)
            if accept(word, m):
                out.append(word)
            return
        if rem_a:
            extend("a", rem_a - 1, rem_b)
        if rem_b:
            extend("b", rem_a, rem_b - 1)

    walk(n_a, n_b)
    return sorted(out)


def brute_enumerate_u(m: int, n: int, cap: int | None = None) -> list[str]:
    """All U-words of length (2m+3)n, sorted, by pruned exhaustive search."""
    return _brute_enumerate(m, n, dyck_mode=False, cap=cap)


def brute_enumerate_d(m: int, n: int, cap: int | None = None) -> list[str]:
    """All nonempty D-words of length (2m+3)n, sorted, by pruned exhaustive search."""
    return _brute_enumerate(m, n, dyck_mode=True, cap=cap)
