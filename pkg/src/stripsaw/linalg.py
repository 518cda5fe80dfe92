"""Exact Gaussian elimination over any field with Python arithmetic operators.

Used with ``Fraction`` entries for sequence fitting and with ``RatFun``
entries when summing path weights of an automaton.  No pivoting heuristics
beyond "first nonzero": every step is exact, so numerical stability is not
a concern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class NoSolution:
    """The system is inconsistent."""


@dataclass(frozen=True)
class Underdetermined:
    """Consistent but rank-deficient system.

    ``particular`` is the solution with all free variables set to zero;
    ``nullity`` is the dimension of the solution space.
    """

    nullity: int
    particular: tuple


def eliminate(rows: Sequence[Sequence], rhs: Sequence, ncols: int | None = None,
              zero=Fraction(0)):
    """Row-reduce [rows | rhs] over the entries' field.

    Returns (consistent, particular, nullity).  ``particular`` is None when
    inconsistent, otherwise the free-variables-zero solution as a list.
    Entries must support +, -, *, / and truthiness (zero test); ``zero``
    must be the field's zero element.
    """
    m = len(rows)
    if len(rhs) != m:
        raise ValueError("matrix/vector size mismatch")
    if ncols is None:
        ncols = len(rows[0]) if m else 0
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")

    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    row = 0
    for col in range(ncols):
        if row == m:
            break
        pivot = None
        for r in range(row, m):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        for r in range(m):
            if r != row and aug[r][col]:
                factor = aug[r][col] / pv
                for j in range(col, ncols + 1):
                    aug[r][j] = aug[r][j] - factor * aug[row][j]
        pivot_cols.append(col)
        row += 1

    for r in range(row, m):
        if aug[r][ncols]:
            return False, None, ncols - len(pivot_cols)

    particular = [zero] * ncols
    for r, col in enumerate(pivot_cols):
        particular[col] = aug[r][ncols] / aug[r][col]
    return True, particular, ncols - len(pivot_cols)


def solve_linear_system(a: Sequence[Sequence], b: Sequence):
    """Solve A x = b exactly.

    Returns the unique solution as a list of Fractions, or a NoSolution /
    Underdetermined marker carrying the nullspace dimension.  A must be
    rectangular with len(A) == len(b).
    """
    rows = [[Fraction(x) for x in r] for r in a]
    rhs = [Fraction(x) for x in b]
    consistent, particular, nullity = eliminate(rows, rhs)
    if not consistent:
        return NoSolution()
    if nullity > 0:
        return Underdetermined(nullity=nullity, particular=tuple(particular))
    return particular
