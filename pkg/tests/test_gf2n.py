import pytest
from hypothesis import given
from hypothesis import strategies as st

from arfinv.errors import ParseError, ReducibleModulus, ZeroInverse
from arfinv.gf2n import (
    BinaryField,
    artin_schreier,
    as_solve,
    binary_field,
    cokernel_rep,
    fe_add,
    fe_inv,
    fe_mul,
    fe_sqrt,
    frobenius,
    trace,
)

from conftest import GF2, GF4, GF8

OMEGA = 2  # root of x^2+x+1 in GF(4)
ALPHA = 2  # root of x^3+x+1 in GF(8)


def schoolbook_mul(a, b, modulus):
    """Independent reference: multiply coefficient lists, reduce top-down."""
    n = modulus.bit_length() - 1
    coeffs = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            coeffs[i + j] ^= ((a >> i) & 1) & ((b >> j) & 1)
    mod_bits = [(modulus >> i) & 1 for i in range(n + 1)]
    for k in range(2 * n - 1, n - 1, -1):
        if coeffs[k]:
            for i in range(n + 1):
                coeffs[k - n + i] ^= mod_bits[i]
    return sum(c << i for i, c in enumerate(coeffs[:n]))


def test_add_examples():
    assert fe_add(GF4, OMEGA, OMEGA) == 0
    assert fe_add(GF4, OMEGA, 1) == 3
    assert fe_add(GF8, 4, 2) == 6


def test_mul_examples():
    assert GF4.modulus == 7 and GF8.modulus == 11
    assert fe_mul(GF4, OMEGA, OMEGA) == 3
    assert fe_mul(GF8, ALPHA, 4) == 3
    for a in GF8.elements():
        assert fe_mul(GF8, a, 1) == a


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8])
def test_mul_matches_schoolbook(n):
    F = binary_field(n)
    for a in range(min(F.order, 64)):
        for b in range(min(F.order, 64)):
            assert F.mul(a, b) == schoolbook_mul(a, b, F.modulus)


def test_inv_examples():
    assert fe_inv(GF8, 1) == 1
    assert fe_inv(GF4, OMEGA) == 3
    assert fe_inv(GF8, ALPHA) == 0b101
    # exhaustive oracle for GF(8)
    for a in range(1, 8):
        (b,) = [b for b in range(8) if schoolbook_mul(a, b, 11) == 1]
        assert fe_inv(GF8, a) == b
    with pytest.raises(ZeroInverse):
        fe_inv(GF4, 0)


def test_frobenius_examples():
    assert frobenius(GF8, 0) == 0 and frobenius(GF8, 1) == 1
    assert frobenius(GF4, OMEGA) == 3
    assert frobenius(GF8, 4) == 6


def test_sqrt_examples():
    assert fe_sqrt(GF8, 1) == 1
    assert fe_sqrt(GF4, OMEGA) == 3
    (r,) = [r for r in range(8) if schoolbook_mul(r, r, 11) == ALPHA]
    assert r == 6 and fe_sqrt(GF8, ALPHA) == 6


def test_artin_schreier_examples():
    assert artin_schreier(GF8, 0) == 0 and artin_schreier(GF8, 1) == 0
    assert artin_schreier(GF4, OMEGA) == 1
    assert artin_schreier(GF8, ALPHA) == 6


def test_as_solve_examples():
    assert as_solve(GF8, 0) == 0
    sols = [x for x in GF4.elements() if schoolbook_mul(x, x, 7) ^ x == 1]
    assert sols == [2, 3]
    assert as_solve(GF4, 1) == 2
    assert as_solve(GF2, 1) is None


def test_trace_examples():
    assert trace(GF2, 1) == 1
    assert trace(GF4, OMEGA) == 1 and trace(GF4, 1) == 0
    assert trace(GF8, 1) == 1


def test_cokernel_rep_examples(rng):
    assert cokernel_rep(GF4, 1) == 0
    assert cokernel_rep(GF2, 1) == 1
    for F in (GF2, GF4, GF8, binary_field(5)):
        x = F.random(rng)
        assert cokernel_rep(F, F.artin_schreier(x)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_exhaustive_cokernel_structure(n):
    F = binary_field(n)
    elems = list(F.elements())
    by_def = []
    for a in elems:
        s, p = 0, a
        for _ in range(n):
            s ^= p
            p = F.mul(p, p)
        assert s in (0, 1)
        assert F.trace(a) == s
        by_def.append(s)
    image = {F.artin_schreier(x) for x in elems}
    assert len(image) == 1 << (n - 1)
    assert {a for a in elems if F.as_solve(a) is not None} == image == {a for a in elems if by_def[a] == 0}
    assert [a for a in elems if F.artin_schreier(a) == 0] == [0, 1]
    witness = F.class_witness
    assert F.trace(witness) == 1 and all(F.trace(a) == 0 for a in range(witness))


@given(st.integers(1, 16).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))))
def test_field_properties(args):
    n, a, b = args
    F = binary_field(n)
    assert F.artin_schreier(a ^ b) == F.artin_schreier(a) ^ F.artin_schreier(b)
    assert F.sqrt(F.frobenius(a)) == a and F.frobenius(F.sqrt(a)) == a
    x = F.as_solve(a)
    if x is not None:
        assert F.artin_schreier(x) == a and x < x ^ 1
    assert (F.cokernel_rep(a) == F.cokernel_rep(b)) == (F.as_solve(a ^ b) is not None)
    if a:
        assert F.mul(a, F.inv(a)) == 1


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        BinaryField(2, 5)
    with pytest.raises(ReducibleModulus):
        BinaryField(4, 0b10101)  # (x^2+x+1)^2
    with pytest.raises(ParseError):
        BinaryField(17, (1 << 17) | 9)
    with pytest.raises(ParseError):
        BinaryField(3, 7)


def test_default_moduli_are_irreducible():
    for n in range(1, 17):
        F = binary_field(n)
        assert F.n == n and F.modulus & 1


def test_element_parse_round_trip():
    for a in GF8.elements():
        assert GF8.parse_elem(GF8.format_elem(a)) == a
    with pytest.raises(ParseError):
        GF8.parse_elem("8")
    with pytest.raises(ParseError):
        GF8.parse_elem("x")
