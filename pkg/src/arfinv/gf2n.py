"""Binary fields GF(2^n), n <= 16.

Elements are plain ints below 2^n; bit i is the coefficient of alpha^i in
the polynomial basis, alpha a root of the field modulus. Addition is XOR.
"""

from __future__ import annotations

import functools
import random  # noqa: F401  (annotations)
from dataclasses import dataclass, field

from . import poly2
from .errors import ContextMismatch, ParseError, ReducibleModulus, ZeroInverse
from .linalg import solve_gf2

MAX_DEGREE = 16


@dataclass(frozen=True, eq=False)
class BinaryField:
    """GF(2^n) = GF(2)[x]/(modulus).

    The modulus is checked for irreducibility at construction. Pass
    ``validate=False`` only to build deliberately broken contexts (the
    selftest negative control does this).
    """

    n: int
    modulus: int
    validate: bool = True
    _exp: list = field(init=False, repr=False)
    _log: list = field(init=False, repr=False)
    _trace_mask: int = field(init=False, repr=False)

    zero = 0
    one = 1
    perfect = True

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ParseError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.n}")
        if poly2.deg(self.modulus) != self.n:
            raise ParseError(f"modulus {self.modulus} does not have degree {self.n}")
        irreducible = poly2.is_irreducible(self.modulus)
        if self.validate and not irreducible:
            raise ReducibleModulus(f"modulus {poly2.to_str(self.modulus)} is reducible over GF(2)")
        exp, log = _tables(self.n, self.modulus) if irreducible else (None, None)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_trace_mask", self._compute_trace_mask())

    def __eq__(self, other):
        return isinstance(other, BinaryField) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def spec(self) -> str:
        return f"gf2:{self.n}:{self.modulus}"

    def __repr__(self):
        return f"BinaryField({self.spec})"

    def elements(self):
        return range(self.order)

    # arithmetic

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._log is None:
            return poly2.mod(poly2.mul(a, b), self.modulus)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        if self._log is None:
            return self.pow(a, self.order - 2)
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        """a^(2^(n-1)), the inverse of Frobenius."""
        for _ in range(self.n - 1):
            a = self.mul(a, a)
        return a

    def artin_schreier(self, a: int) -> int:
        return self.mul(a, a) ^ a

    def trace(self, a: int) -> int:
        return (a & self._trace_mask).bit_count() & 1

    def _compute_trace_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            a = s = 1 << i
            for _ in range(self.n - 1):
                a = self.mul(a, a)
                s ^= a
            # s lies in {0, 1} for a valid field
            if s & 1:
                mask |= 1 << i
        return mask

    def as_solve(self, a: int) -> int | None:
        """Smallest-encoding x with x^2 + x = a, or None when a is not in the image."""
        cols = [self.artin_schreier(1 << i) for i in range(self.n)]
        x = solve_gf2(cols, a)
        if x is None:
            return None
        return min(x, x ^ 1)

    @property
    def class_witness(self) -> int:
        """Smallest-encoding element of trace 1."""
        m = self._trace_mask
        return m & -m

    def cokernel_rep(self, a: int) -> int:
        return self.class_witness if self.trace(a) else 0

    def class_eq(self, a: int, b: int) -> bool:
        return self.trace(a ^ b) == 0

    def is_member(self, a: int) -> bool:
        return self.trace(a) == 0

    def join(self, other) -> BinaryField:
        if other != self:
            raise ContextMismatch(f"{self.spec} vs {getattr(other, 'spec', other)}")
        return self

    # I/O and sampling

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.order)

    def format_elem(self, a: int) -> str:
        return str(a)

    def parse_elem(self, s) -> int:
        if isinstance(s, bool):
            raise ParseError(f"not a field element: {s!r}")
        if isinstance(s, int):
            v = s
        else:
            try:
                v = int(str(s).strip(), 10)
            except ValueError:
                raise ParseError(f"not a decimal element encoding: {s!r}") from None
        if not 0 <= v < self.order:
            raise ParseError(f"element {v} out of range for {self.spec}")
        return v

    def elem_to_json(self, a: int):
        return a


def _tables(n: int, modulus: int):
    """exp/log tables from a generator of the multiplicative group.

    The modulus must be irreducible.
    """
    order = (1 << n) - 1
    for g in range(1, 1 << n):
        exp = [0] * (2 * order)
        a = 1
        seen_one = False
        for k in range(order):
            exp[k] = a
            a = poly2.mod(poly2.mul(a, g), modulus)
            if a == 1 and k < order - 1:
                seen_one = True
                break
        if seen_one or a != 1:
            continue
        for k in range(order, 2 * order):
            exp[k] = exp[k - order]
        log = [0] * (1 << n)
        for k in range(order):
            log[exp[k]] = k
        return exp, log
    raise AssertionError("no generator found")


@functools.lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Smallest irreducible modulus of degree n with nonzero constant term."""
    for m in range((1 << n) | 1, 1 << (n + 1), 2):
        if poly2.is_irreducible(m):
            return m
    raise ReducibleModulus(f"no irreducible polynomial of degree {n}")  # unreachable


@functools.lru_cache(maxsize=None)
def binary_field(n: int, modulus: int | None = None) -> BinaryField:
    return BinaryField(n, default_modulus(n) if modulus is None else modulus)


# Function-style surface mirroring the method names.

def fe_add(ctx: BinaryField, a: int, b: int) -> int:
    return ctx.add(a, b)


def fe_mul(ctx: BinaryField, a: int, b: int) -> int:
    return ctx.mul(a, b)


def fe_inv(ctx: BinaryField, a: int) -> int:
    return ctx.inv(a)


def frobenius(ctx: BinaryField, a: int) -> int:
    return ctx.frobenius(a)


def fe_sqrt(ctx: BinaryField, a: int) -> int:
    return ctx.sqrt(a)


def artin_schreier(ctx: BinaryField, a: int) -> int:
    return ctx.artin_schreier(a)


def as_solve(ctx: BinaryField, a: int) -> int | None:
    return ctx.as_solve(a)


def trace(ctx: BinaryField, a: int) -> int:
    return ctx.trace(a)


def cokernel_rep(ctx: BinaryField, a: int) -> int:
    return ctx.cokernel_rep(a)
