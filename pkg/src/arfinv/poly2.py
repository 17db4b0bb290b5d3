"""Polynomials over GF(2) packed into Python ints.

Bit i of the int is the coefficient of X^i; 0 is the zero polynomial.
"""

from __future__ import annotations


def deg(a: int) -> int:
    """Degree of ``a``; -1 for the zero polynomial."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product."""
    if a.bit_length() > b.bit_length():
        a, b = b, a
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def divmod2(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod(a: int, b: int) -> int:
    return divmod2(a, b)[1]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def square(a: int) -> int:
    """Square in GF(2)[X]: spread bit i to bit 2i."""
    return spread(a, 1)


def spread(a: int, k: int) -> int:
    """Substitute X -> X^(2^k)."""
    if k == 0:
        return a
    step = 1 << k
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 1
        i += step
    return r


def is_square(a: int) -> bool:
    """True iff every odd-degree coefficient vanishes."""
    return a & _odd_mask(a.bit_length()) == 0


def halve(a: int) -> int:
    """Inverse of :func:`square`; ``a`` must satisfy :func:`is_square`."""
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 2
        i += 1
    return r


_ODD_MASKS: dict[int, int] = {}


def _odd_mask(nbits: int) -> int:
    nbits += nbits & 1
    m = _ODD_MASKS.get(nbits)
    if m is None:
        m = int("10" * (nbits // 2), 2) if nbits else 0
        _ODD_MASKS[nbits] = m
    return m


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    n = deg(p)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if mod(p, f) == 0:
                return False
    return True


def to_str(a: int, var: str = "x") -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(deg(a), -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)
