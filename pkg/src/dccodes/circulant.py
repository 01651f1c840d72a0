"""Circulant matrices over F2, 2-cyclotomic cosets, and the orthogonal count.

The number of m x m orthogonal circulants is computed purely from the
coset structure of the doubling map on Z_m: each irreducible factor of
x^m - 1 beyond (x - 1) corresponds to a coset, its degree to the coset
size, and self-reciprocality of the factor to the coset being fixed
setwise by negation. No polynomial factorization is ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2ring import RingElement, _conj_bits, _mul_bits, _rotl


@dataclass(frozen=True)
class CirculantMatrix:
    """m x m circulant over F2, determined by its first row (bit j = column j)."""

    m: int
    first_row: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")
        if not 0 <= self.first_row < (1 << self.m):
            raise ValueError(f"first row 0x{self.first_row:x} does not fit in m={self.m} bits")

    def rows(self) -> list[int]:
        """Row i is the cyclic right-shift of the first row by i positions."""
        return [_rotl(self.first_row, i, self.m) for i in range(self.m)]

    def to_array(self) -> np.ndarray:
        """Dense uint8 matrix, entry [i, j] = bit j of row i."""
        return np.array(
            [[(row >> j) & 1 for j in range(self.m)] for row in self.rows()],
            dtype=np.uint8,
        )


def from_poly(f: RingElement) -> CirculantMatrix:
    """Circulant whose first row is the coefficient vector of f."""
    return CirculantMatrix(f.m, f.bits)


def is_orthogonal(a: CirculantMatrix) -> bool:
    """True iff A A^T = I, decided through the polynomial identity f fbar = 1."""
    return _mul_bits(a.first_row, _conj_bits(a.first_row, a.m), a.m) == 1


@dataclass(frozen=True)
class CosetPartition:
    """Orbit partition of Z_m under s -> 2s, with per-coset negation flags."""

    m: int
    cosets: tuple[tuple[int, ...], ...]
    self_reciprocal: tuple[bool, ...]


def cyclotomic_cosets(m: int) -> CosetPartition:
    """2-cyclotomic cosets modulo odd m, flagged self-reciprocal when C_s = C_(-s)."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"cyclotomic cosets need odd m >= 1, got {m}")
    seen = [False] * m
    cosets = []
    flags = []
    for s in range(m):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = True
            orbit.append(t)
            t = (2 * t) % m
        coset = tuple(sorted(orbit))
        cosets.append(coset)
        flags.append(coset == tuple(sorted((-t) % m for t in coset)))
    return CosetPartition(m, tuple(cosets), tuple(flags))


def _odd_count(m: int) -> int:
    """Product formula over the nontrivial cosets of odd m."""
    part = cyclotomic_cosets(m)
    count = 1
    paired_seen = set()
    for coset, self_recip in zip(part.cosets, part.self_reciprocal):
        if coset == (0,):
            continue
        if self_recip:
            # negation acts without fixed points, so the size 2c is even
            count *= (1 << (len(coset) // 2)) + 1
        elif coset not in paired_seen:
            partner = tuple(sorted((-t) % m for t in coset))
            paired_seen.add(partner)
            count *= (1 << len(coset)) - 1
    return count


def _even_doubling_factor(s: int) -> int:
    """Word-length of the 2^w factor relating the counts at 2s and s."""
    if s % 2 == 1:
        return (s + 1) // 2
    if (s // 2) % 2 == 1:
        return s // 2 + 1
    return s // 2


def count_orthogonal(m: int) -> int:
    """Number of m x m orthogonal circulant matrices over F2.

    Odd m uses the coset product formula; even m = 2s applies the
    doubling recursion, which bottoms out at the 1 x 1 matrix (1).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if m % 2 == 1:
        return _odd_count(m)
    s = m // 2
    return (1 << _even_doubling_factor(s)) * count_orthogonal(s)


def orthogonal_count_breakdown(m: int) -> list[str]:
    """Human-readable decomposition of count_orthogonal(m), one line per term."""
    lines = [f"count_orthogonal({m}) = {count_orthogonal(m)}"]
    while m % 2 == 0:
        s = m // 2
        w = _even_doubling_factor(s)
        if s % 2 == 1:
            why = f"s={s} odd"
        elif (s // 2) % 2 == 1:
            why = f"s={s} even, s/2 odd"
        else:
            why = f"s={s} = 0 mod 4"
        lines.append(f"m={m} = 2*{s}: {why} -> factor 2^{w} = {1 << w}, recurse on {s}")
        m = s
    part = cyclotomic_cosets(m)
    lines.append(f"m={m} odd: coset product over Z_{m} under doubling")
    paired_seen = set()
    for coset, self_recip in zip(part.cosets, part.self_reciprocal):
        body = "{" + ",".join(str(t) for t in coset) + "}"
        if coset == (0,):
            lines.append(f"  coset {body}: excluded (unit factor)")
        elif self_recip:
            c = len(coset) // 2
            lines.append(f"  coset {body}: size {len(coset)}, self-reciprocal -> factor 2^{c}+1 = {(1 << c) + 1}")
        elif coset not in paired_seen:
            partner = tuple(sorted((-t) % m for t in coset))
            paired_seen.add(partner)
            pbody = "{" + ",".join(str(t) for t in partner) + "}"
            d = len(coset)
            lines.append(f"  cosets {body} and {pbody}: reciprocal pair of size {d} -> factor 2^{d}-1 = {(1 << d) - 1}")
    return lines
