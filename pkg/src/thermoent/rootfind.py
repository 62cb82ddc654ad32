"""Bracketing helpers for monotone one-dimensional searches."""

from __future__ import annotations

MAX_DOUBLINGS = 80


def expand_upper(pred, start: float = 1.0) -> float:
    """Double ``start`` until ``pred`` holds; return the first such value."""
    hi = start
    for _ in range(MAX_DOUBLINGS):
        if pred(hi):
            return hi
        hi *= 2.0
    raise ArithmeticError(f"predicate still false at {hi:g}")


def bisect(pred, lo: float, hi: float, xtol: float, until=None) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` with ``pred(lo)`` false and ``pred(hi)`` true.

    Stops once ``hi - lo <= xtol`` and, if given, ``until(lo, hi)`` holds, or
    when the bracket cannot shrink further in floating point.
    """
    while True:
        width_ok = hi - lo <= xtol
        if width_ok and (until is None or until(lo, hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi
