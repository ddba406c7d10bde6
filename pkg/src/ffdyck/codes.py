"""Cross-bifix-free binary codes built from factor-free Dyck words.

Splitting a nonempty factor-free Dyck word as w = w1 w2 forces the valuation
of w1 strictly positive and that of w2 strictly negative, so no nonempty
proper prefix of any word in D can be the suffix of any word in D (itself
included).  Rendered over {0, 1}, the D-words of lengths (2m+3)n therefore
form a non-overlapping code of variable length.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import grammar, words


@dataclass(frozen=True)
class CodeSet:
    """A set of binary codewords drawn from D for one slope."""

    m: int
    words: tuple[str, ...]

    @property
    def slope(self) -> str:
        return f"{2 * self.m + 1}/2"

    @property
    def lengths(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.words:
            out[len(w)] = out.get(len(w), 0) + 1
        return out

    def to_json_obj(self) -> dict:
        return {"slope": self.slope, "m": self.m, "words": list(self.words)}


def build_code(m: int, n_max: int, cap: int | None = None) -> CodeSet:
    """All D-words of lengths (2m+3)n for n = 1..n_max, over the 01 alphabet."""
    collected: list[str] = []
    for n in range(1, n_max + 1):
        collected.extend(
            words.to_binary(w) for w in grammar.generate_d_words(m, n, cap=cap)
        )
    return CodeSet(m, tuple(sorted(collected)))


def verify_cross_bifix_free(
    ws: list[str] | tuple[str, ...],
) -> tuple[bool, tuple[str, str, int] | None]:
    """Check that no nonempty proper prefix of any word is a suffix of any word.

    Self-pairs are included, so each word is also checked to be bifix-free.
    Returns (True, None) on success, else (False, violation) with the
    lexicographically first violating triple (w1, w2, overlap length), where
    the length-`overlap` prefix of w1 equals a suffix of w2.
    """
    ordered = sorted(set(ws))
    for w1 in ordered:
        for w2 in ordered:
            for k in range(1, min(len(w1) - 1, len(w2)) + 1):
                if w1[:k] == w2[-k:]:
                    return False, (w1, w2, k)
    return True, None
