"""Pure double-circulant codes: construction, self-duality, equivalence,
and the weight-conditional extremality predicates for lengths up to 44."""

from __future__ import annotations

from dataclasses import dataclass

from . import linear_code
from .circulant import count_orthogonal
from .gf2ring import RingElement, _conj_bits, _mul_bits, _recip_bits, _rotl


@dataclass(frozen=True)
class DcDescriptor:
    """Generator pair (1, f(x)) of a [2m, m] double-circulant code."""

    m: int
    f: RingElement

    def __post_init__(self) -> None:
        if self.f.m != self.m:
            raise ValueError(f"generator modulus {self.f.m} differs from descriptor m={self.m}")

    @classmethod
    def from_bits(cls, m: int, bits: int) -> "DcDescriptor":
        return cls(m, RingElement(m, bits))


def build_rows(m: int, f_bits: int) -> tuple[int, ...]:
    """Generator rows of [I_m | A(f)]: row i = (e_i | x^i f)."""
    return tuple((1 << i) | (_rotl(f_bits, i, m) << m) for i in range(m))


def build(d: DcDescriptor) -> linear_code.BinaryCode:
    """The [2m, m] code generated by (1, f(x))."""
    return linear_code.BinaryCode(2 * d.m, build_rows(d.m, d.f.bits))


def is_self_dual(d: DcDescriptor) -> bool:
    """Self-duality criterion f(x) fbar(x) = 1 in R."""
    return _mul_bits(d.f.bits, _conj_bits(d.f.bits, d.m), d.m) == 1


def _orbit_bits(bits: int, m: int) -> set[int]:
    """Closure of a nonzero coefficient word under rotation and reciprocal."""
    rec = _recip_bits(bits)
    out = set()
    for i in range(m):
        out.add(_rotl(bits, i, m))
        out.add(_rotl(rec, i, m))
    return out


def equivalence_class(d: DcDescriptor) -> frozenset[RingElement]:
    """All generators x^i f and x^i f* yielding codes equivalent to d's."""
    if d.f.bits == 0:
        raise ValueError("the zero polynomial has no equivalence orbit")
    return frozenset(RingElement(d.m, b) for b in _orbit_bits(d.f.bits, d.m))


def _orbit_min_bits(bits: int, m: int) -> int:
    # zero is fixed by every rotation; its orbit minimum is itself
    if bits == 0:
        return 0
    return min(_orbit_bits(bits, m))


def canonical_form(d: DcDescriptor) -> RingElement:
    """Smallest coefficient word in the equivalence orbit (dedup key)."""
    if d.f.bits == 0:
        raise ValueError("the zero polynomial has no canonical form")
    return RingElement(d.m, _orbit_min_bits(d.f.bits, d.m))


def _require_self_dual(d: DcDescriptor, op: str) -> None:
    if not is_self_dual(d):
        raise ValueError(f"{op} requires a self-dual generator, got f={d.f}")


def extremal_upto20(d: DcDescriptor) -> bool:
    """Extremality test for self-dual DC codes of length 2m <= 20.

    The code meets the bound d = 4 exactly when wt(f) = 3, or wt(f) > 3
    and some shifted sum f + x^i f collapses to a binomial x^j + x^k.
    """
    _require_self_dual(d, "extremal_upto20")
    if 2 * d.m > 20:
        raise ValueError(f"extremal_upto20 covers lengths up to 20, got 2m={2 * d.m}")
    fb = d.f.bits
    w = fb.bit_count()
    if w == 3:
        return True
    if w < 3:
        return False
    m = d.m
    return any((fb ^ _rotl(fb, i, m)).bit_count() == 2 for i in range(1, m))


def extremal_22(d: DcDescriptor) -> bool:
    """Extremality test at length 22 for weight-5 self-dual generators."""
    _require_self_dual(d, "extremal_22")
    if d.m != 11:
        raise ValueError(f"extremal_22 needs m=11, got m={d.m}")
    fb = d.f.bits
    if fb.bit_count() != 5:
        raise ValueError(f"extremal_22 needs wt(f)=5, got {fb.bit_count()}")
    return all((fb ^ _rotl(fb, i, 11)).bit_count() != 2 for i in range(1, 11))


def extremal_24_44(d: DcDescriptor) -> bool:
    """Extremality test for lengths 24..44 and weight-7 self-dual generators."""
    _require_self_dual(d, "extremal_24_44")
    m = d.m
    if not 12 <= m <= 22:
        raise ValueError(f"extremal_24_44 needs 12 <= m <= 22, got m={m}")
    fb = d.f.bits
    if fb.bit_count() != 7:
        raise ValueError(f"extremal_24_44 needs wt(f)=7, got {fb.bit_count()}")
    shifted = [_rotl(fb, i, m) for i in range(m)]
    for i in range(1, m):
        if (fb ^ shifted[i]).bit_count() == 2:
            return False
    for i in range(1, m):
        fi = fb ^ shifted[i]
        for j in range(i + 1, m):
            if (fi ^ shifted[j]).bit_count() == 1:
                return False
    return True


def trisection(m: int) -> DcDescriptor:
    """The extremal self-dual generator 1 + x^(m/4) + x^(m/2) for 2m <= 20."""
    if m % 4:
        raise ValueError(f"trisection needs m divisible by 4, got {m}")
    if 2 * m > 20:
        raise ValueError(f"trisection is established for lengths up to 20, got 2m={2 * m}")
    return DcDescriptor.from_bits(m, 1 | (1 << m // 4) | (1 << m // 2))


def no_extremal_by_count(m: int) -> bool:
    """True when only the m monomial generators are self-dual, forcing d = 2."""
    if m < 2:
        raise ValueError(f"no_extremal_by_count needs m >= 2, got {m}")
    return count_orthogonal(m) == m
