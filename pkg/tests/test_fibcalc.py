"""Exactness checks for the F-arithmetic: frozen examples, oracles, properties."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, strategies as st

from cobweb.fibcalc import (
    falling_f_factorial,
    fib,
    fib_factorial,
    fibonomial,
    fibonomial_row,
)

# F(0)..F(12), unrolled by hand.
FIB_PREFIX = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]


def naive_fib_sequence(n: int) -> list[int]:
    """Independent oracle: plain pairwise recurrence, no caching."""
    out = [0]
    a, b = 0, 1
    for _ in range(n):
        out.append(b)
        a, b = b, a + b
    return out


def ratio_form_fibonomial(n: int, k: int) -> int:
    """Independent oracle: the factorial-ratio form, checked exact."""
    if k > n:
        return 0
    seq = naive_fib_sequence(n)

    def ffact(m: int) -> int:
        out = 1
        for s in range(1, m + 1):
            out *= seq[s]
        return out

    numerator = ffact(n)
    denominator = ffact(k) * ffact(n - k)
    assert numerator % denominator == 0
    return numerator // denominator


class TestFib:
    def test_examples(self):
        assert fib(1) == 1
        assert fib(5) == 5
        assert fib(10) == 55

    def test_prefix(self):
        assert [fib(n) for n in range(13)] == FIB_PREFIX

    def test_matches_naive_recurrence_to_1000(self):
        oracle = naive_fib_sequence(1000)
        assert [fib(n) for n in range(1001)] == oracle

    def test_known_value_at_100(self):
        assert fib(100) == 354224848179261915075

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            fib(-1)

    def test_strictly_increasing_and_nonzero(self):
        values = [fib(n) for n in range(1, 301)]
        assert all(v != 0 for v in values)
        assert all(b > a for a, b in zip(values[1:], values[2:]))

    def test_concurrent_calls_agree(self):
        expected = naive_fib_sequence(800)
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(fib, range(801)))
        assert results == expected


class TestFibFactorial:
    def test_examples(self):
        assert fib_factorial(0) == 1
        assert fib_factorial(4) == 6
        assert fib_factorial(10) == 122522400

    def test_equals_full_falling_product(self):
        for n in range(61):
            assert falling_f_factorial(n, n) == fib_factorial(n)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            fib_factorial(-3)


class TestFallingFFactorial:
    def test_examples(self):
        assert falling_f_factorial(5, 2) == 15
        assert falling_f_factorial(7, 0) == 1
        assert falling_f_factorial(3, 4) == 0

    def test_zero_whenever_k_exceeds_n(self):
        assert falling_f_factorial(3, 100) == 0
        for n in range(20):
            assert falling_f_factorial(n, n + 1) == 0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            falling_f_factorial(-1, 0)
        with pytest.raises(ValueError):
            falling_f_factorial(3, -2)

    @given(st.integers(0, 120), st.integers(0, 120))
    def test_factorial_split_identity(self, n, k):
        # k descending factors times the remaining factorial rebuild n_F!.
        if k <= n:
            assert falling_f_factorial(n, k) * fib_factorial(n - k) == fib_factorial(n)


class TestFibonomial:
    def test_examples(self):
        assert fibonomial(5, 2) == 15
        assert fibonomial(7, 0) == 1
        assert fibonomial(10, 5) == 136136

    def test_zero_above_diagonal(self):
        assert fibonomial(2, 5) == 0
        assert fibonomial(0, 1) == 0

    def test_edges(self):
        for n in range(30):
            assert fibonomial(n, 0) == 1
            assert fibonomial(n, n) == 1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            fibonomial(-1, 0)
        with pytest.raises(ValueError):
            fibonomial(5, -1)

    def test_symmetry_and_ratio_form_exhaustive(self):
        for n in range(41):
            for k in range(n + 1):
                value = fibonomial(n, k)
                assert value == fibonomial(n, n - k)
                assert value == ratio_form_fibonomial(n, k)

    @given(st.integers(0, 150), st.integers(0, 150))
    def test_multiplicative_identity(self, n, k):
        # Cross-multiplied factorial-ratio form: holds exactly or the value is 0.
        if k <= n:
            assert fibonomial(n, k) * fib_factorial(k) * fib_factorial(n - k) == fib_factorial(n)
        else:
            assert fibonomial(n, k) == 0


class TestFibonomialRow:
    def test_examples(self):
        assert fibonomial_row(0) == [1]
        assert fibonomial_row(4) == [1, 3, 6, 3, 1]
        assert fibonomial_row(5) == [1, 5, 15, 15, 5, 1]

    def test_palindromic(self):
        for n in range(26):
            row = fibonomial_row(n)
            assert len(row) == n + 1
            assert row == row[::-1]
