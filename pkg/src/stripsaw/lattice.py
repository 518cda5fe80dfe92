"""Square-lattice walks coded as step words, and vertical strip geometry.

A walk is written as a string over the step alphabet: ``u`` up, ``d`` down,
``l`` left, ``r`` right.  Walks start at the origin.  A strip is a set of
columns [xlo, xhi] with unbounded vertical extent; the origin's column must
belong to it.
"""

from __future__ import annotations

from dataclasses import dataclass

STEP_DELTAS = {"u": (0, 1), "d": (0, -1), "l": (-1, 0), "r": (1, 0)}

_MIRROR = str.maketrans("ud", "du")

Point = tuple[int, int]
Walk = tuple[Point, ...]


@dataclass(frozen=True)
class StripSpec:
    """Columns xlo..xhi of the square lattice, all rows."""

    xlo: int
    xhi: int

    def __post_init__(self):
        if not self.xlo <= 0 <= self.xhi:
            raise ValueError("origin not in strip")

    @property
    def width(self) -> int:
        return self.xhi - self.xlo + 1

    def contains(self, x: int) -> bool:
        return self.xlo <= x <= self.xhi


def check_word(word: str) -> None:
    """Raise ValueError unless every character is one of u, d, l, r."""
    for ch in word:
        if ch not in STEP_DELTAS:
            raise ValueError(f"invalid step {ch!r}")


def realize(word: str) -> Walk:
    """The sequence of lattice points visited, starting at (0, 0)."""
    check_word(word)
    x, y = 0, 0
    points = [(0, 0)]
    for ch in word:
        dx, dy = STEP_DELTAS[ch]
        x, y = x + dx, y + dy
        points.append((x, y))
    return tuple(points)


def is_valid_saw(word: str, strip: StripSpec) -> bool:
    """True iff the walk never revisits a point and stays inside the strip."""
    points = realize(word)
    if len(set(points)) != len(points):
        return False
    return all(strip.contains(x) for x, _ in points)


def mirror_x(word: str) -> str:
    """Reflect across the horizontal axis: swap u and d, keep l and r."""
    check_word(word)
    return word.translate(_MIRROR)


def walk_to_json(walk: Walk) -> list[list[int]]:
    return [[x, y] for x, y in walk]
