"""Integer sequence generators: Fibonacci, Lucas, binomials, q/s coefficients.

Every generator here is computable two independent ways (fast doubling vs
naive recurrence; recurrence-filled tables vs direct summation), so each can
serve as an oracle for the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


class RecurrenceMismatch(ValueError):
    """A recurrence-filled table entry disagrees with the direct definition."""


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)          # F_{2k}
    d = a * a + b * b            # F_{2k+1}
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """F_n with F_0=0, F_1=1, in O(log n) big-integer multiplications."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    """L_n with L_0=2, L_1=1, via L_n = 2*F_{n+1} - F_n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = _fib_pair(n)
    return 2 * b - a


def fib_naive(n: int) -> int:
    """Reference implementation: iterate the recurrence term by term."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas_naive(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range-zero convention is relied on throughout: the identity
    sums here silently truncate via vanishing binomial tails.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def q_coeff(n: int, c: int) -> int:
    """q(n, c) = sum_{m=0..n} (-1)^m C(n+1, 2m+c+1)."""
    if n < 0 or c < 0:
        raise ValueError("n and c must be non-negative")
    return sum((-1) ** m * binomial(n + 1, 2 * m + c + 1) for m in range(n + 1))


def s_coeff(n: int, c: int) -> int:
    """s(n, c) = (-1)^(n+c) * sum_{m=0..n} (-1)^m C(n+1, 2m+c+1)."""
    return (-1) ** (n + c) * q_coeff(n, c)


@dataclass(frozen=True)
class CoeffTable:
    """Triangular table of q(n,c) or s(n,c), 0 <= c <= n <= n_max."""

    kind: str  # "Q" or "S"
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, nc: tuple[int, int]) -> int:
        n, c = nc
        return self.rows[n][c]


# Entries at or below this row index are re-derived from the direct sum at
# build time; a disagreement raises RecurrenceMismatch.
_CROSS_CHECK_LIMIT = 20


def build_coeff_table(kind: str, n_max: int) -> CoeffTable:
    """Fill a q- or s-table, using the recurrences inside their stated
    validity range and the direct definition elsewhere.

    The q recurrences used (valid for row n -> n+1):
      c in 1..n:  q(n+1,c) = q(n,c-1) + q(n,c)
      c = 0:      q(n+1,0) = C(n+1,0) - q(n,1) + q(n,0)
    The s recurrences used:
      c in 1..n-1: s(n+1,c) = s(n,c-1) - s(n,c)
      c = 0:       s(n+1,0) = -s(n,1) - s(n,0) + (-1)^(n+1)
    The diagonal entry of each new row comes from the definition.
    """
    if kind not in ("Q", "S"):
        raise ValueError(f"kind must be 'Q' or 'S', got {kind!r}")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    direct = q_coeff if kind == "Q" else s_coeff

    rows: list[tuple[int, ...]] = [(direct(0, 0),)]
    for n in range(n_max):
        prev = rows[n]

        def prev_at(c: int) -> int:
            return prev[c] if c <= n else direct(n, c)

        row: list[int] = []
        if kind == "Q":
            row.append(1 - prev_at(1) + prev_at(0))
            for c in range(1, n + 1):
                row.append(prev_at(c - 1) + prev_at(c))
        else:
            row.append(-prev_at(1) - prev_at(0) + (-1) ** (n + 1))
            for c in range(1, n):
                row.append(prev_at(c - 1) - prev_at(c))
            if n >= 1:
                row.append(direct(n + 1, n))
        row.append(direct(n + 1, n + 1))
        rows.append(tuple(row))

    for n in range(min(n_max, _CROSS_CHECK_LIMIT) + 1):
        for c in range(n + 1):
            expected = direct(n, c)
            if rows[n][c] != expected:
                raise RecurrenceMismatch(
                    f"{kind}({n},{c}): recurrence gave {rows[n][c]}, "
                    f"definition gives {expected}"
                )
    return CoeffTable(kind=kind, n_max=n_max, rows=tuple(rows))
