"""Arithmetic in R = F2[x]/(x^m - 1) and in the free polynomial ring over F2.

A ring element is a fixed-width coefficient bit-vector: bit i of ``bits``
holds the coefficient of x^i (little-endian within the word). Free
polynomials are plain Python ints under the same convention; an int never
stores leading zero bits, so normalization is automatic, the zero
polynomial is 0, and degree(0) is the sentinel -1.

Two textual forms are accepted: a sparse monomial sum ("x^6+x^4+x^3+x+1")
and a hex coefficient string with explicit modulus ("m=9:0x05B").
Printers emit the sparse form with descending exponents.
"""

from __future__ import annotations

from dataclasses import dataclass


def _rotl(bits: int, i: int, m: int) -> int:
    """Rotate an m-bit word left by i positions (multiplication by x^i)."""
    i %= m
    if i == 0:
        return bits
    return ((bits << i) | (bits >> (m - i))) & ((1 << m) - 1)


def _mul_bits(a: int, b: int, m: int) -> int:
    """Cyclic convolution mod 2 of two m-bit coefficient words."""
    acc = 0
    while a:
        low = a & -a
        acc ^= _rotl(b, low.bit_length() - 1, m)
        a ^= low
    return acc


def _conj_bits(a: int, m: int) -> int:
    """Index reversal fixing the constant term: x^i -> x^(m-i)."""
    out = a & 1
    a >>= 1
    i = 1
    while a:
        if a & 1:
            out |= 1 << (m - i)
        a >>= 1
        i += 1
    return out


def _recip_bits(a: int) -> int:
    """Reverse the coefficient list of a nonzero polynomial up to its degree."""
    d = a.bit_length() - 1
    out = 0
    while a:
        low = a & -a
        out |= 1 << (d - (low.bit_length() - 1))
        a ^= low
    return out


def _fold_bits(bits: int, m: int) -> int:
    """Reduce a free polynomial by x^m -> 1 (block-fold of the bit word)."""
    mask = (1 << m) - 1
    out = 0
    while bits:
        out ^= bits & mask
        bits >>= m
    return out


@dataclass(frozen=True)
class RingElement:
    """Element of F2[x]/(x^m - 1): modulus degree plus coefficient word."""

    m: int
    bits: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus degree must be positive, got m={self.m}")
        if not 0 <= self.bits < (1 << self.m):
            raise ValueError(f"coefficient word 0x{self.bits:x} does not fit in m={self.m} bits")

    @classmethod
    def zero(cls, m: int) -> "RingElement":
        return cls(m, 0)

    @classmethod
    def one(cls, m: int) -> "RingElement":
        return cls(m, 1)

    @classmethod
    def monomial(cls, m: int, e: int) -> "RingElement":
        return cls(m, 1 << (e % m))

    @classmethod
    def from_text(cls, text: str, m: int | None = None) -> "RingElement":
        """Parse either textual form; exponents are reduced mod m."""
        bits, m_text = parse_poly_text(text)
        if m_text is not None:
            if m is not None and m != m_text:
                raise ValueError(f"modulus mismatch: m={m} given but text says m={m_text}")
            m = m_text
        if m is None:
            raise ValueError(f"no modulus for ring element {text!r}; pass m or use the m=<int>:0x form")
        return cls(m, _fold_bits(bits, m))

    def __add__(self, other: "RingElement") -> "RingElement":
        return add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul(self, other)

    def __str__(self) -> str:
        return poly_text(self.bits)


def _check_same_modulus(a: RingElement, b: RingElement) -> None:
    if a.m != b.m:
        raise ValueError(f"modulus mismatch: m={a.m} vs m={b.m}")


def add(a: RingElement, b: RingElement) -> RingElement:
    """Characteristic-2 addition (bitwise XOR of coefficient words)."""
    _check_same_modulus(a, b)
    return RingElement(a.m, a.bits ^ b.bits)


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Product in R: cyclic convolution of the coefficient words mod 2."""
    _check_same_modulus(a, b)
    return RingElement(a.m, _mul_bits(a.bits, b.bits, a.m))


def conjugate(a: RingElement) -> RingElement:
    """x^m a(1/x) reduced mod x^m - 1 (full-width index reversal)."""
    return RingElement(a.m, _conj_bits(a.bits, a.m))


def reciprocal(a: RingElement) -> RingElement:
    """x^deg(a) a(1/x): coefficient reversal up to the degree of a."""
    if a.bits == 0:
        raise ValueError("reciprocal of the zero polynomial is undefined (no degree)")
    return RingElement(a.m, _recip_bits(a.bits))


def shift(a: RingElement, i: int) -> RingElement:
    """Multiplication by x^i: cyclic rotation of the coefficient word."""
    if i < 0:
        raise ValueError(f"shift amount must be a natural number, got {i}")
    return RingElement(a.m, _rotl(a.bits, i, a.m))


def complement(a: RingElement) -> RingElement:
    """Flip every one of the m coefficient bits."""
    return RingElement(a.m, a.bits ^ ((1 << a.m) - 1))


def weight(a: RingElement) -> int:
    """Number of nonzero coefficients."""
    return a.bits.bit_count()


def lift(a: RingElement) -> int:
    """The unique free-polynomial representative of degree < m."""
    return a.bits


def free_degree(a: int) -> int:
    """Degree of a free polynomial (-1 for the zero polynomial)."""
    return a.bit_length() - 1


def free_mod(a: int, b: int) -> int:
    """Remainder of free polynomial a modulo nonzero b."""
    if b == 0:
        raise ValueError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def free_gcd(a: int, b: int) -> int:
    """Greatest common divisor over F2 via the Euclidean remainder sequence.

    Nonzero polynomials over F2 are monic by construction; gcd(a, 0) = a.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, free_mod(a, b)
    return a


def xm_minus_one(m: int) -> int:
    """The free polynomial x^m - 1 = x^m + 1."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return (1 << m) | 1


def poly_text(bits: int) -> str:
    """Sparse monomial text with descending exponents ("x^3+x+1", "0")."""
    if bits == 0:
        return "0"
    terms = []
    for e in range(bits.bit_length() - 1, -1, -1):
        if (bits >> e) & 1:
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return "+".join(terms)


def parse_poly_text(text: str) -> tuple[int, int | None]:
    """Parse polynomial text, returning (bits, m-or-None).

    Accepts the sparse monomial form and the hex form with an optional
    "m=<int>:" prefix. Repeated monomials in the sparse form are rejected.
    """
    s = "".join(text.split())
    m = None
    if s.startswith("m="):
        head, sep, rest = s.partition(":")
        if not sep:
            raise ValueError(f"ill-formed polynomial text {text!r}: missing ':' after modulus")
        try:
            m = int(head[2:])
        except ValueError:
            raise ValueError(f"ill-formed modulus in polynomial text {text!r}") from None
        if m < 1:
            raise ValueError(f"modulus degree must be positive in {text!r}")
        s = rest
    if s.lower().startswith("0x"):
        try:
            return int(s, 16), m
        except ValueError:
            raise ValueError(f"ill-formed hex polynomial text {text!r}") from None
    if s == "0":
        return 0, m
    bits = 0
    for term in s.split("+"):
        if term == "1":
            e = 0
        elif term == "x":
            e = 1
        elif term.startswith("x^"):
            try:
                e = int(term[2:])
            except ValueError:
                raise ValueError(f"ill-formed term {term!r} in polynomial text {text!r}") from None
            if e < 0:
                raise ValueError(f"negative exponent in polynomial text {text!r}")
        else:
            raise ValueError(f"ill-formed term {term!r} in polynomial text {text!r}")
        if (bits >> e) & 1:
            raise ValueError(f"repeated term {term!r} in polynomial text {text!r}")
        bits |= 1 << e
    return bits, m
