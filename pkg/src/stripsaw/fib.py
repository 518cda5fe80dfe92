"""Fibonacci numbers with F(1) = F(2) = 1, exact to any index."""

from __future__ import annotations


def fibonacci(n: int) -> int:
    """F(0) = 0, F(1) = 1, F(n) = F(n-1) + F(n-2)."""
    if n < 0:
        raise ValueError("fibonacci is defined for n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
