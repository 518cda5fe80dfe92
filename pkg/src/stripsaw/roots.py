"""Certified isolation of the smallest real polynomial root in (0, 1].

Everything is exact: root counts come from sign variations of a Sturm
chain evaluated at rational points, and the final enclosure is produced by
bisection, so the returned interval provably brackets the root.  No
floating point, no eigenvalue solvers.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import Poly

Interval = tuple[Fraction, Fraction]


def smallest_positive_root(p: Poly, tol: Fraction) -> Interval | None:
    """Enclose the smallest real root of p in (0, 1] to width <= tol.

    Returns (lo, hi) with p changing sign (or vanishing) across the
    interval, or None when p has no root there.  Roots exactly hit by the
    search (such as t = 1) come back as zero-width intervals.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no isolated roots")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    # roots at t = 0 are outside (0, 1]: strip trailing powers of t
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    q = Poly(coeffs).squarefree_part()
    if q.degree < 1:
        return None

    root_at_one = q(1) == 0
    if root_at_one:
        q = q // Poly([-1, 1])  # peel the simple root at t = 1
    if q.degree < 1:
        return (Fraction(1), Fraction(1)) if root_at_one else None

    chain = _sturm_chain(q)
    lo, hi = Fraction(0), Fraction(1)
    count = _variations(chain, lo) - _variations(chain, hi)
    if count == 0:
        return (Fraction(1), Fraction(1)) if root_at_one else None

    # invariant: q(lo) != 0, q(hi) != 0, and the leftmost root of the
    # original polynomial in (0, 1] lies in (lo, hi) with `count` roots there
    while hi - lo > tol or count > 1:
        mid = (lo + hi) / 2
        if q(mid) == 0:
            deflated = q // Poly([-mid, Fraction(1)])
            dchain = _sturm_chain(deflated) if deflated.degree >= 1 else None
            left = (_variations(dchain, lo) - _variations(dchain, mid)) if dchain else 0
            if left == 0:
                return (mid, mid)
            q, chain = deflated, dchain
            hi, count = mid, left
            continue
        left = _variations(chain, lo) - _variations(chain, mid)
        if left > 0:
            hi, count = mid, left
        else:
            lo = mid
    return lo, hi


def _sturm_chain(q: Poly) -> list[Poly]:
    chain = [q, q.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = poly(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
