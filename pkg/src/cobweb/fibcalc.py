"""Exact Fibonacci and Fibonomial arithmetic on arbitrary-precision integers.

Everything here is pure integer math: no floating point, no rounding, no
overflow.  All functions are total on nonnegative indices and safe to call
from multiple threads.
"""

from __future__ import annotations

import threading

__all__ = [
    "fib",
    "fib_factorial",
    "falling_f_factorial",
    "fibonomial",
    "fibonomial_row",
]

# Append-only sequence cache.  The lock guards extension; readers only index
# below the published length, which is safe because entries never change.
_FIB = [0, 1]
_FIB_LOCK = threading.Lock()


def _check_index(value: int, name: str) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value}")


def fib(n: int) -> int:
    """Return the n-th Fibonacci number, with F(0)=0 and F(1)=F(2)=1."""
    _check_index(n, "n")
    if n >= len(_FIB):
        with _FIB_LOCK:
            while len(_FIB) <= n:
                _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n]


def fib_factorial(n: int) -> int:
    """Product F(1)*F(2)*...*F(n); the empty product (n = 0) is 1."""
    _check_index(n, "n")
    fib(n)
    out = 1
    for s in range(1, n + 1):
        out *= _FIB[s]
    return out


def falling_f_factorial(n: int, k: int) -> int:
    """Product of k descending factors F(n)*F(n-1)*...*F(n-k+1).

    Returns 1 for k = 0 (empty product).  For k > n the descending product
    meets or crosses F(0) = 0, so the result is 0 without evaluating factors
    at negative indices.
    """
    _check_index(n, "n")
    _check_index(k, "k")
    if k == 0:
        return 1
    if k > n:
        return 0
    fib(n)
    out = 1
    for j in range(k):
        out *= _FIB[n - j]
    return out


def fibonomial(n: int, k: int) -> int:
    """Fibonomial coefficient: falling F-factorial of length k over the k-F-factorial.

    The division is exact for every 0 <= k <= n; a nonzero remainder would be
    an implementation bug and raises AssertionError.  Returns 0 for k > n,
    mirroring the ordinary binomial convention.
    """
    _check_index(n, "n")
    _check_index(k, "k")
    if k > n:
        return 0
    numerator = falling_f_factorial(n, k)
    denominator = fib_factorial(k)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(
            f"fibonomial({n}, {k}): non-exact division {numerator} / {denominator}"
        )
    return quotient


def fibonomial_row(n: int) -> list[int]:
    """Row [C_F(n,0), ..., C_F(n,n)] of the Fibonomial triangle; palindromic."""
    _check_index(n, "n")
    return [fibonomial(n, k) for k in range(n + 1)]
