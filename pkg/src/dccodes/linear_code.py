"""Generic binary linear codes with exact metrics.

This is the oracle layer: every theorem-level predicate elsewhere in the
package is required to agree with the brute-force computations here.
Generator rows are ints with bit j holding coordinate j. Codewords are
never stored; the weight distribution is accumulated streaming over a
Gray-code walk of the message space, one row-XOR per codeword.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_DIMENSION_BUDGET = 28


class EnumerationBudgetError(ValueError):
    """Raised instead of silently approximating when 2^k is too large."""


def rank_f2(rows) -> int:
    """Rank over F2 of a matrix given as an iterable of row words."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            lead = cur.bit_length() - 1
            if lead in pivots:
                cur ^= pivots[lead]
            else:
                pivots[lead] = cur
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class BinaryCode:
    """[n, k] binary linear code given by k independent generator rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        if not 1 <= k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={self.n}")
        for row in self.rows:
            if not 0 <= row < (1 << self.n):
                raise ValueError(f"generator row 0x{row:x} does not fit in n={self.n} bits")
        if rank_f2(self.rows) != k:
            raise ValueError("generator rows are linearly dependent over F2")

    @property
    def k(self) -> int:
        return len(self.rows)

    def to_array(self) -> np.ndarray:
        """Dense uint8 generator matrix."""
        return np.array(
            [[(row >> j) & 1 for j in range(self.n)] for row in self.rows],
            dtype=np.uint8,
        )


@dataclass(frozen=True)
class CodeMetrics:
    min_distance: int
    weight_distribution: tuple[int, ...]
    hull_dimension: int
    self_dual: bool
    doubly_even: bool


def parity_check_standard(code: BinaryCode) -> tuple[int, ...]:
    """Parity check rows [A^T | I_(n-k)] for a generator in standard form [I_k | A]."""
    k = code.k
    left_mask = (1 << k) - 1
    for i, row in enumerate(code.rows):
        if row & left_mask != 1 << i:
            raise ValueError("generator is not in standard form [I_k | A]")
    right = [row >> k for row in code.rows]
    h_rows = []
    for j in range(code.n - k):
        h = 1 << (k + j)
        for i in range(k):
            h |= ((right[i] >> j) & 1) << i
        h_rows.append(h)
    return tuple(h_rows)


def weight_distribution(code: BinaryCode, budget: int = DEFAULT_DIMENSION_BUDGET) -> tuple[int, ...]:
    """Exact codeword weight counts, indexed 0..n, from one Gray-code pass."""
    k = code.k
    if k > budget:
        raise EnumerationBudgetError(
            f"enumeration too large: k={k} exceeds the k <= {budget} budget"
        )
    counts = [0] * (code.n + 1)
    counts[0] = 1
    rows = code.rows
    acc = 0
    for u in range(1, 1 << k):
        acc ^= rows[(u & -u).bit_length() - 1]
        counts[acc.bit_count()] += 1
    return tuple(counts)


def min_distance(code: BinaryCode, budget: int = DEFAULT_DIMENSION_BUDGET) -> int:
    """Exact minimum nonzero codeword weight."""
    counts = weight_distribution(code, budget)
    for w in range(1, code.n + 1):
        if counts[w]:
            return w
    raise AssertionError("unreachable: a k >= 1 code has a nonzero codeword")


def _gram_rows_raw(rows) -> list[int]:
    """G G^T over F2 as row words (bit j of row i = <row_i, row_j>)."""
    k = len(rows)
    gram = [0] * k
    for i in range(k):
        ri = rows[i]
        for j in range(i, k):
            if (ri & rows[j]).bit_count() & 1:
                gram[i] |= 1 << j
                if i != j:
                    gram[j] |= 1 << i
    return gram


def is_self_dual(code: BinaryCode) -> bool:
    """True iff n = 2k and G G^T = 0 over F2."""
    if code.n != 2 * code.k:
        return False
    return all(g == 0 for g in _gram_rows_raw(code.rows))


def hull_dimension(code: BinaryCode) -> int:
    """dim(C intersect C-perp) = k - rank(G G^T); zero means LCD."""
    return code.k - rank_f2(_gram_rows_raw(code.rows))


def extremal_bound(n: int) -> int:
    """Largest minimum distance a self-dual binary code of even length n can have."""
    if n < 2 or n % 2:
        raise ValueError(f"need even n >= 2, got {n}")
    return 4 * (n // 24) + (6 if n % 24 == 22 else 4)


def is_extremal(code: BinaryCode, budget: int = DEFAULT_DIMENSION_BUDGET) -> bool:
    """True iff a self-dual code meets the distance bound for its length."""
    if not is_self_dual(code):
        raise ValueError("extremality is defined only for self-dual codes")
    return min_distance(code, budget) == extremal_bound(code.n)


def metrics(code: BinaryCode, budget: int = DEFAULT_DIMENSION_BUDGET) -> CodeMetrics:
    """All exact metrics from a single enumeration pass plus the hull rank."""
    counts = weight_distribution(code, budget)
    d = next(w for w in range(1, code.n + 1) if counts[w])
    return CodeMetrics(
        min_distance=d,
        weight_distribution=counts,
        hull_dimension=hull_dimension(code),
        self_dual=is_self_dual(code),
        doubly_even=all(c == 0 for w, c in enumerate(counts) if w % 4),
    )
