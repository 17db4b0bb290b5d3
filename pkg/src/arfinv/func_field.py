"""The rational function field F2(t) and its perfect-closure tower.

Level m of the tower is K_m = F2(u) with u = t^(1/2^m); the union over all
m is the perfect closure of F2(t). A :class:`TowerElem` stores a reduced
rational function in u together with the *minimal* level at which it is
defined, so that the stored level is the element's height over F2(t).

Because F2 is fixed by Frobenius, R(u)^2 = R(u^2). Hence squaring an
element of K_m (m >= 1) just reinterprets the same rational function one
level down, and taking a square root reinterprets it one level up.
"""

from __future__ import annotations

import os
import random
import re
from dataclasses import dataclass

from . import poly2
from .cokernel import ASClass
from .errors import ContextMismatch, DegreeCapExceeded, LevelCapExceeded, ParseError, ZeroInverse
from .linalg import solve_gf2

DEFAULT_MAX_LEVEL = 8
DEGREE_CAP = 64


def max_level() -> int:
    """Tower level cap, overridable through ARF_MAX_LEVEL."""
    raw = os.environ.get("ARF_MAX_LEVEL")
    if raw is None:
        return DEFAULT_MAX_LEVEL
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"ARF_MAX_LEVEL must be an integer, got {raw!r}") from None


def _check_level(m: int) -> None:
    if m < 0:
        raise ParseError(f"negative tower level {m}")
    cap = max_level()
    if m > cap:
        raise LevelCapExceeded(f"tower level {m} exceeds cap {cap}")


@dataclass(frozen=True)
class RatFunc:
    """Reduced fraction num/den of GF(2) polynomials packed as ints."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroInverse("zero denominator")
        g = poly2.gcd(self.num, self.den)
        if self.num == 0:
            object.__setattr__(self, "den", 1)
        elif g != 1:
            object.__setattr__(self, "num", poly2.divmod2(self.num, g)[0])
            object.__setattr__(self, "den", poly2.divmod2(self.den, g)[0])

    def __add__(self, other: RatFunc) -> RatFunc:
        if self.den == other.den:
            return RatFunc(self.num ^ other.num, self.den)
        return RatFunc(
            poly2.mul(self.num, other.den) ^ poly2.mul(other.num, self.den),
            poly2.mul(self.den, other.den),
        )

    __sub__ = __add__

    def __mul__(self, other: RatFunc) -> RatFunc:
        return RatFunc(poly2.mul(self.num, other.num), poly2.mul(self.den, other.den))

    def inverse(self) -> RatFunc:
        if self.num == 0:
            raise ZeroInverse("0 has no inverse")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        return self * other.inverse()

    def __bool__(self):
        return self.num != 0

    def square(self) -> RatFunc:
        return RatFunc(poly2.square(self.num), poly2.square(self.den))

    def spread(self, k: int) -> RatFunc:
        """Substitute the variable by its 2^k-th power."""
        return RatFunc(poly2.spread(self.num, k), poly2.spread(self.den, k))

    def is_square(self) -> bool:
        return poly2.is_square(self.num) and poly2.is_square(self.den)

    def degree(self) -> int:
        return max(poly2.deg(self.num), poly2.deg(self.den))

    def __str__(self):
        return format_ratfunc(self, "t")


def rf_arith(a: RatFunc, b: RatFunc | None, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


T = RatFunc(0b10)
ONE = RatFunc(1)
ZERO = RatFunc(0)


@dataclass(frozen=True)
class TowerElem:
    """An element of the perfect closure, stored at its minimal level."""

    level: int
    value: RatFunc

    def __post_init__(self):
        level, value = self.level, self.value
        while level > 0 and value.is_square():
            value = RatFunc(poly2.halve(value.num), poly2.halve(value.den))
            level -= 1
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "value", value)
        _check_level(level)

    def at_level(self, m: int) -> RatFunc:
        """The same element written as a rational function in t^(1/2^m)."""
        if m < self.level:
            raise ValueError(f"element of height {self.level} does not live at level {m}")
        return self.value.spread(m - self.level)

    def __add__(self, other: TowerElem) -> TowerElem:
        m = max(self.level, other.level)
        return TowerElem(m, self.at_level(m) + other.at_level(m))

    __sub__ = __add__

    def __mul__(self, other: TowerElem) -> TowerElem:
        m = max(self.level, other.level)
        return TowerElem(m, self.at_level(m) * other.at_level(m))

    def inverse(self) -> TowerElem:
        return TowerElem(self.level, self.value.inverse())

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return format_tower(self)


def tower(value, level: int = 0) -> TowerElem:
    if isinstance(value, int):
        value = RatFunc(value)
    return TowerElem(level, value)


def tower_frobenius(x: TowerElem) -> TowerElem:
    if x.level == 0:
        return TowerElem(0, x.value.square())
    return TowerElem(x.level - 1, x.value)


def tower_sqrt(x: TowerElem, cap: int | None = None) -> TowerElem:
    if x.level == 0 and x.value.is_square():
        return TowerElem(0, RatFunc(poly2.halve(x.value.num), poly2.halve(x.value.den)))
    level = x.level + 1
    limit = max_level() if cap is None else min(cap, max_level())
    if level > limit:
        raise LevelCapExceeded(f"square root needs level {level}, cap is {limit}")
    return TowerElem(level, x.value)


def height(x: TowerElem) -> int:
    return x.level


def as_member(x: TowerElem, level: int | None = None) -> TowerElem | None:
    """Solve c^2 + c = x inside K_level (default: the height of x).

    Write x = U/V reduced. If c = P/Q in lowest terms then
    c^2 + c = (P^2 + PQ)/Q^2, and gcd(P^2 + PQ, Q^2) = 1, so a solution
    forces Q^2 = V and P^2 + PQ = U. The map P -> P^2 + PQ is GF(2)-linear
    in the coefficients of P, and its kernel is {0, Q}.

    Degree bound for P, by comparing deg P with deg Q:
      deg P > deg Q: the leading term of P^2 survives, deg U = 2 deg P;
      deg P < deg Q: deg P < deg Q;
      deg P = deg Q: deg P = deg Q.
    So deg P <= max(deg Q, deg U) always suffices.

    Returns the solution whose numerator has the smaller integer encoding
    (the other one is c + 1), or None.
    """
    m = x.level if level is None else level
    _check_level(m)
    r = x.at_level(m)
    U, V = r.num, r.den
    if poly2.deg(U) > DEGREE_CAP << m or poly2.deg(V) > DEGREE_CAP << m:
        raise DegreeCapExceeded(f"element too large for an Artin-Schreier solve: {format_tower(x)}")
    if not poly2.is_square(V):
        return None
    Q = poly2.halve(V)
    bound = max(poly2.deg(Q), poly2.deg(U))
    cols = [poly2.square(1 << i) ^ poly2.mul(1 << i, Q) for i in range(bound + 1)]
    P = solve_gf2(cols, U)
    if P is None:
        return None
    return TowerElem(m, RatFunc(min(P, P ^ Q), Q))


def class_eq(a: ASClass, b: ASClass) -> bool:
    return a == b


def lemma0_forward(x, m: int) -> ASClass:
    """The class of x in F2(t)/P viewed in K_m/P."""
    _check_level(m)
    if isinstance(x, RatFunc):
        x = TowerElem(0, x)
    if x.level != 0:
        raise ValueError("lemma0_forward expects an element of F2(t)")
    return ASClass(TowerField(m), x)


def lemma0_descend(x: TowerElem) -> tuple[RatFunc, TowerElem]:
    """Return (y, w) with y = x^(2^h) in F2(t), h the height of x, and
    w = x^(2^(h-1)) + ... + x^2 + x, so that w^2 + w = y + x exactly."""
    w = TowerElem(0, ZERO)
    p = x
    for _ in range(x.level):
        w = w + p
        p = tower_frobenius(p)
    assert p.level == 0
    return p.value, w


@dataclass(frozen=True)
class TowerField:
    """K_level viewed as a field context. Level 0 is F2(t) itself."""

    level: int = 0

    perfect = False

    def __post_init__(self):
        _check_level(self.level)

    @property
    def zero(self) -> TowerElem:
        return TowerElem(0, ZERO)

    @property
    def one(self) -> TowerElem:
        return TowerElem(0, ONE)

    @property
    def spec(self) -> str:
        return "f2t" if self.level == 0 else f"f2t-tower:{self.level}"

    @property
    def var(self) -> str:
        return "t" if self.level == 0 else "u"

    def add(self, a: TowerElem, b: TowerElem) -> TowerElem:
        return a + b

    def mul(self, a: TowerElem, b: TowerElem) -> TowerElem:
        return a * b

    def inv(self, a: TowerElem) -> TowerElem:
        return a.inverse()

    def sqrt(self, a: TowerElem) -> TowerElem:
        return tower_sqrt(a, cap=self.level)

    def artin_schreier(self, a: TowerElem) -> TowerElem:
        return a * a + a

    def as_solve(self, a: TowerElem) -> TowerElem | None:
        return as_member(a, self.level)

    def is_member(self, a: TowerElem) -> bool:
        return as_member(a, self.level) is not None

    def class_eq(self, a: TowerElem, b: TowerElem) -> bool:
        return self.is_member(a + b)

    def cokernel_rep(self, a: TowerElem) -> TowerElem:
        return a

    def join(self, other) -> TowerField:
        if not isinstance(other, TowerField):
            raise ContextMismatch(f"{self.spec} vs {getattr(other, 'spec', other)}")
        return self if self.level >= other.level else other

    def contains(self, a: TowerElem) -> bool:
        return a.level <= self.level

    def random(self, rng: random.Random, max_deg: int = 4, den: bool = False) -> TowerElem:
        return TowerElem(self.level, random_ratfunc(rng, max_deg, den))

    def format_elem(self, a: TowerElem) -> str:
        return format_ratfunc(a.at_level(self.level), self.var)

    def parse_elem(self, s) -> TowerElem:
        r = parse_ratfunc(str(s), self.var, self.level)
        return TowerElem(self.level, r)

    def elem_to_json(self, a: TowerElem) -> str:
        return self.format_elem(a)


def random_poly(rng: random.Random, max_deg: int) -> int:
    return rng.getrandbits(max_deg + 1)


def random_ratfunc(rng: random.Random, max_deg: int, den: bool = True) -> RatFunc:
    num = random_poly(rng, max_deg)
    d = 1
    if den and rng.random() < 0.5:
        d = 0
        while d == 0:
            d = random_poly(rng, max_deg)
    return RatFunc(num, d)


# Expression syntax:
#   poly     := term ('+' term)*
#   term     := '0' | '1' | VAR | VAR '^' uint
#   ratfunc  := poly | '(' poly ')/(' poly ')'
#   tower    := 'level=' uint ';' ratfunc

_TERM = re.compile(r"\s*(?:(0|1)|([a-z])(?:\s*\^\s*(\d+))?)\s*")


def parse_poly(s: str, var: str, max_exp: int | None = None) -> int:
    text = s.strip()
    if not text:
        raise ParseError("empty polynomial")
    p = 0
    for raw in text.split("+"):
        m = _TERM.fullmatch(raw)
        if m is None:
            raise ParseError(f"bad term {raw.strip()!r} in {s!r}")
        const, v, exp = m.groups()
        if const is not None:
            p ^= int(const)
            continue
        if v != var:
            raise ParseError(f"variable {v!r} not allowed here (expected {var!r})")
        e = 1 if exp is None else int(exp)
        if max_exp is not None and e > max_exp:
            raise DegreeCapExceeded(f"exponent {e} exceeds cap {max_exp}")
        p ^= 1 << e
    return p


def parse_ratfunc(s: str, var: str = "t", level: int = 0) -> RatFunc:
    cap = DEGREE_CAP << level
    text = s.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
    if m:
        num = parse_poly(m.group(1), var, cap)
        den = parse_poly(m.group(2), var, cap)
        if den == 0:
            raise ParseError(f"zero denominator in {s!r}")
        return RatFunc(num, den)
    if "(" in text or ")" in text or "/" in text:
        raise ParseError(f"malformed rational function {s!r}")
    return RatFunc(parse_poly(text, var, cap))


def parse_tower(s: str) -> TowerElem:
    m = re.fullmatch(r"\s*level\s*=\s*(\d+)\s*;(.*)", s)
    if m is None:
        raise ParseError(f"expected 'level=<m>; <expr>', got {s!r}")
    level = int(m.group(1))
    _check_level(level)
    var = "t" if level == 0 else "u"
    return TowerElem(level, parse_ratfunc(m.group(2), var, level))


def format_ratfunc(r: RatFunc, var: str = "t") -> str:
    if r.den == 1:
        return poly2.to_str(r.num, var)
    return f"({poly2.to_str(r.num, var)})/({poly2.to_str(r.den, var)})"


def format_tower(x: TowerElem) -> str:
    return f"level={x.level}; {format_ratfunc(x.value, 't' if x.level == 0 else 'u')}"
