"""Bijection between slope-5/2 U-words and colored rooted trees.

A U-word of length 7n (m = 2) corresponds to a rooted ordered tree with 2n
edges whose internal nodes have outdegree 2 or 4, every outdegree-2 node
carrying one of three colors.  The correspondence identifies four building
blocks with one-node trees:

    babbbab  <->  blue node   (down "ba",  gap "bbba",  up "b")
    abbbbab  <->  red node    (down "a",   gap "bbbba", up "b")
    abbbabb  <->  green node  (down "a",   gap "bbba",  up "bb")
    abbbabbbabbbab  <->  outdegree-4 node (down "a", gaps "bbba", up "b")

and longer words arise by inserting words into these blocks right after a
letter a.  Serializing a tree is a counterclockwise traversal emitting the
edge labels above; parsing a word replays the traversal left to right.

Parsing works on the maximal run of b's preceding each a (and the run that
ends the word).  Such a run splays into a sequence of upward moves followed
by one sibling gap: a run of length 0 or 1 is a new first-child edge ("a",
or "ba" coloring the parent blue); otherwise upward moves are peeled off the
left of the run until 3 b's remain (an uncolored sibling gap) or 4 remain
while the cursor's parent is a still-childless-but-one uncolored node (the
red gap).  An upward move consumes two b's and paints the abandoned parent
green when that parent is an uncolored two-child node entered through a
plain "a" edge, and one b otherwise.  These cases are mutually exclusive, so
the parse is deterministic; round-trip tests over every word of lengths 7,
14 and 21 pin the reading down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator

from .words import CapExceeded, brute_cap, is_in_u

COLORS = ("blue", "red", "green")

_CANON_LETTER = {"blue": "B", "red": "R", "green": "G"}


class NotInU(Exception):
    """The word handed to the encoder is not a nonempty slope-5/2 U-word."""


class MalformedTraversal(Exception):
    """The cursor lost its place while replaying a word (an internal bug)."""


class MalformedTree(Exception):
    """A tree value violates the outdegree/color invariants."""


@dataclass(frozen=True)
class ColoredTree:
    """Rooted ordered tree with outdegrees 0, 2 or 4; 2-nodes carry a color."""

    color: str | None = None
    children: tuple["ColoredTree", ...] = ()

    def __post_init__(self) -> None:
        deg = len(self.children)
        if deg not in (0, 2, 4):
            raise MalformedTree(f"outdegree {deg} is not 0, 2 or 4")
        if deg == 2:
            if self.color not in COLORS:
                raise MalformedTree(
                    f"outdegree-2 node must be colored blue/red/green, got {self.color!r}"
                )
        elif self.color is not None:
            raise MalformedTree(
                f"outdegree-{deg} node must be uncolored, got {self.color!r}"
            )

    @property
    def edge_count(self) -> int:
        return len(self.children) + sum(c.edge_count for c in self.children)

    def canonical(self) -> str:
        """Preorder rendering: L leaf, B/R/G colored 2-node, F 4-node."""
        if not self.children:
            return "L"
        letter = _CANON_LETTER.get(self.color, "F")
        return letter + "(" + ",".join(c.canonical() for c in self.children) + ")"

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "color": self.color if self.color else "none",
            "children": [c.to_json_obj() for c in self.children],
        }

    @classmethod
    def from_json_obj(cls, obj: Any) -> "ColoredTree":
        if not isinstance(obj, dict):
            raise MalformedTree(f"tree node must be an object, got {type(obj).__name__}")
        color = obj.get("color", "none")
        if color not in COLORS and color != "none":
            raise MalformedTree(f"unknown color {color!r}")
        children = obj.get("children", [])
        if not isinstance(children, list):
            raise MalformedTree("children must be a list")
        return cls(
            None if color == "none" else color,
            tuple(cls.from_json_obj(c) for c in children),
        )


LEAF = ColoredTree()


def tree_to_word(tree: ColoredTree) -> str:
    """Counterclockwise traversal of the tree, emitting the edge labels."""
    parts: list[str] = []

    def emit(node: ColoredTree) -> None:
        if not node.children:
            return
        parts.append("ba" if node.color == "blue" else "a")
        emit(node.children[0])
        gap = "bbbba" if node.color == "red" else "bbba"
        for child in node.children[1:]:
            parts.append(gap)
            emit(child)
        parts.append("bb" if node.color == "green" else "b")

    emit(tree)
    return "".join(parts)


class _Node:
    """Mutable node used while replaying a word; frozen afterwards."""

    __slots__ = ("color", "children", "parent", "first_edge")

    def __init__(self, parent: "_Node | None"):
        self.color: str | None = None
        self.children: list[_Node] = []
        self.parent = parent
        self.first_edge: str | None = None

    def freeze(self) -> ColoredTree:
        try:
            return ColoredTree(self.color, tuple(c.freeze() for c in self.children))
        except MalformedTree as exc:
            raise MalformedTraversal(f"replay built an invalid tree: {exc}") from exc


def _groups(word: str) -> Iterator[tuple[int, bool]]:
    """(length of b-run, whether an `a` follows) for each maximal b-run."""
    run = 0
    for c in word:
        if c == "b":
            run += 1
        else:
            yield run, True
            run = 0
    yield run, False


def word_to_tree(word: str) -> ColoredTree:
    """Parse a nonempty slope-5/2 U-word into its colored tree."""
    if not word or not is_in_u(word, 2):
        raise NotInU(f"not a nonempty U-word for slope 5/2: {word!r}")

    root = _Node(None)
    cursor = root

    def fail(msg: str) -> MalformedTraversal:
        return MalformedTraversal(f"{msg} (word {word!r})")

    def descend(label: str) -> None:
        nonlocal cursor
        if cursor.children:
            raise fail("first-child edge from a node that already has children")
        if label == "ba":
            if cursor.color is not None:
                raise fail("blue edge into an already colored node")
            cursor.color = "blue"
        cursor.first_edge = label
        child = _Node(cursor)
        cursor.children.append(child)
        cursor = child

    def green_move_applies() -> bool:
        p = cursor.parent
        return (
            p is not None
            and p.color is None
            and len(p.children) == 2
            and p.children[-1] is cursor
            and p.first_edge == "a"
        )

    def plain_move_applies() -> bool:
        p = cursor.parent
        if p is None or p.children[-1] is not cursor:
            return False
        deg = len(p.children)
        return deg == 4 or (deg == 2 and p.color is not None)

    def move_up(remaining: int) -> int:
        nonlocal cursor
        if green_move_applies():
            if remaining < 2:
                raise fail("green ascent needs two b's")
            cursor.parent.color = "green"
            cursor = cursor.parent
            return remaining - 2
        if plain_move_applies():
            cursor = cursor.parent
            return remaining - 1
        raise fail("no ascent is possible here")

    def red_gap_applies() -> bool:
        p = cursor.parent
        return p is not None and p.color is None and len(p.children) == 1

    def add_sibling(red: bool) -> None:
        nonlocal cursor
        p = cursor.parent
        if p is None or p.children[-1] is not cursor:
            raise fail("sibling gap outside a parent's child list")
        if red:
            p.color = "red"
        elif p.color == "red" or p.color == "green":
            raise fail(f"plain gap under a {p.color} node")
        elif p.color == "blue" and len(p.children) != 1:
            raise fail("blue node taking a third child")
        if len(p.children) >= 4:
            raise fail("node taking a fifth child")
        child = _Node(p)
        p.children.append(child)
        cursor = child

    for run, has_a in _groups(word):
        if has_a:
            if run == 0:
                descend("a")
            elif run == 1:
                descend("ba")
            else:
                remaining = run
                while remaining != 3 and not (remaining == 4 and red_gap_applies()):
                    if remaining <= 2:
                        raise fail(f"b-run remainder {remaining} fits no token")
                    remaining = move_up(remaining)
                add_sibling(red=remaining == 4)
        else:
            remaining = run
            while remaining > 0:
                remaining = move_up(remaining)
            if cursor is not root:
                raise fail("word ended away from the root")

    return root.freeze()


@lru_cache(maxsize=None)
def _trees_with_edges(edges: int) -> tuple[ColoredTree, ...]:
    if edges == 0:
        return (LEAF,)
    out: list[ColoredTree] = []
    for left in range(0, edges - 2 + 1, 2):
        for t1 in _trees_with_edges(left):
            for t2 in _trees_with_edges(edges - 2 - left):
                for color in COLORS:
                    out.append(ColoredTree(color, (t1, t2)))
    if edges >= 4:
        budget = edges - 4
        for e1 in range(0, budget + 1, 2):
            for e2 in range(0, budget - e1 + 1, 2):
                for e3 in range(0, budget - e1 - e2 + 1, 2):
                    e4 = budget - e1 - e2 - e3
                    for t1 in _trees_with_edges(e1):
                        for t2 in _trees_with_edges(e2):
                            for t3 in _trees_with_edges(e3):
                                for t4 in _trees_with_edges(e4):
                                    out.append(ColoredTree(None, (t1, t2, t3, t4)))
    return tuple(sorted(out, key=ColoredTree.canonical))


def enumerate_trees(n: int, cap: int | None = None) -> list[ColoredTree]:
    """All colored trees with 2n edges, sorted by canonical rendering."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if 20**n > brute_cap(cap):
        raise CapExceeded(f"tree count near 20^{n} exceeds the brute-force cap")
    return list(_trees_with_edges(2 * n))
