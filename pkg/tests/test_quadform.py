import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arfinv import linalg
from arfinv.errors import ContextMismatch, DegenerateForm, DimensionMismatch, InvalidForm, SingularMatrix
from arfinv.func_field import TowerField
from arfinv.quadform import (
    QuadForm,
    empty_form,
    qf_base_change,
    qf_eval,
    qf_nondegenerate,
    qf_orth_sum,
    qf_polar,
    qf_polar_from_values,
    random_form,
    random_invertible,
    random_symplectic_map,
    standard_symplectic_gram,
    symplectic_basis,
)

from conftest import GF2, GF4, GF8

H = [[0, 1], [1, 0]]


def hyp(F):
    return QuadForm(F, H, [0, 0])


def test_eval_examples():
    assert qf_eval(hyp(GF2), [1, 1]) == 1
    q = QuadForm(GF4, H, [1, 2])
    assert qf_eval(q, [0, 1]) == 2
    assert qf_eval(q, [0, 0]) == 0
    with pytest.raises(DimensionMismatch):
        qf_eval(q, [1])


def test_eval_matches_monomial_expansion(rng):
    # independent route: sum over all (i, j) of x_i x_j c_ij with c the upper-triangular coefficient matrix
    for _ in range(50):
        q = random_form(GF8, 4, rng, nondegenerate=False)
        x = [GF8.random(rng) for _ in range(4)]
        F = GF8
        s = 0
        for i in range(4):
            for j in range(i, 4):
                c = q.diag[i] if i == j else q.gram[i][j]
                s ^= F.mul(F.mul(x[i], x[j]), c)
        assert qf_eval(q, x) == s


def test_polar_examples(rng):
    assert qf_polar(hyp(GF2), [1, 0], [0, 1]) == 1
    q = random_form(GF8, 4, rng)
    for _ in range(30):
        x = [GF8.random(rng) for _ in range(4)]
        y = [GF8.random(rng) for _ in range(4)]
        assert qf_polar(q, x, x) == 0
        assert qf_polar(q, x, y) == qf_polar_from_values(q, x, y)


def test_nondegenerate_examples():
    assert qf_nondegenerate(hyp(GF2))
    assert not qf_nondegenerate(QuadForm(GF2, [[0]], [0]))
    g = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    assert not qf_nondegenerate(QuadForm(GF2, g, [0] * 4))


def test_invalid_grams_rejected():
    with pytest.raises(InvalidForm):
        QuadForm(GF2, [[1, 1], [1, 0]], [0, 0])
    with pytest.raises(InvalidForm):
        QuadForm(GF4, [[0, 1], [2, 0]], [0, 0])
    with pytest.raises(InvalidForm):
        QuadForm(GF2, [[0, 1], [1, 0]], [0])


def test_orth_sum_examples(rng):
    q = random_form(GF4, 2, rng)
    assert qf_orth_sum(q, empty_form(GF4)) == q
    assert qf_orth_sum(q, random_form(GF4, 4, rng)).dim == 6
    with pytest.raises(ContextMismatch):
        qf_orth_sum(q, hyp(GF8))


def test_base_change_examples(rng):
    q = random_form(GF4, 4, rng)
    assert qf_base_change(q, linalg.identity(GF4, 4)) == q
    swapped = qf_base_change(QuadForm(GF4, H, [1, 3]), [[0, 1], [1, 0]])
    assert swapped.gram == ((0, 1), (1, 0)) and swapped.diag == (3, 1)
    M = random_invertible(GF4, 4, rng)
    q2 = qf_base_change(q, M)
    for _ in range(30):
        x = [GF4.random(rng) for _ in range(4)]
        assert qf_eval(q2, x) == qf_eval(q, linalg.matvec(GF4, M, x))
    with pytest.raises(SingularMatrix):
        qf_base_change(q, [[1, 1, 0, 0]] * 4)


def test_base_change_is_an_action(rng):
    q = random_form(GF8, 4, rng)
    M = random_invertible(GF8, 4, rng)
    N = random_invertible(GF8, 4, rng)
    assert qf_base_change(qf_base_change(q, M), N) == qf_base_change(q, linalg.matmul(GF8, M, N))


def _transformed_gram(q, M):
    F = q.field
    return linalg.matmul(F, linalg.matmul(F, linalg.transpose(M), [list(r) for r in q.gram]), M)


def test_symplectic_basis_examples():
    assert [list(r) for r in symplectic_basis(hyp(GF2)).matrix] == [[1, 0], [0, 1]]
    q = QuadForm(GF4, [[0, 2], [2, 0]], [0, 0])
    S = symplectic_basis(q)
    assert S.f(0) == [0, GF4.inv(2)]
    assert _transformed_gram(q, [list(r) for r in S.matrix]) == standard_symplectic_gram(GF4, 2)


@pytest.mark.parametrize("F,d", [(GF2, 6), (GF4, 4), (GF8, 8), (GF2, 2)])
def test_symplectic_basis_is_standard(F, d, rng):
    for _ in range(20):
        q = random_form(F, d, rng)
        M = [list(r) for r in symplectic_basis(q).matrix]
        assert _transformed_gram(q, M) == standard_symplectic_gram(F, d)


def test_symplectic_basis_over_f2t(rng):
    K = TowerField(0)
    for _ in range(10):
        q = random_form(K, 4, rng, max_deg=3)
        M = [list(r) for r in symplectic_basis(q).matrix]
        assert _transformed_gram(q, M) == standard_symplectic_gram(K, 4)


def test_symplectic_basis_degenerate():
    with pytest.raises(DegenerateForm):
        symplectic_basis(QuadForm(GF2, [[0]], [1]))
    with pytest.raises(DegenerateForm):
        symplectic_basis(QuadForm(GF2, [[0, 0], [0, 0]], [1, 1]))


def test_random_symplectic_map(rng):
    q = QuadForm(GF8, standard_symplectic_gram(GF8, 6), [1] * 6)
    M = random_symplectic_map(q, 42)
    assert M == random_symplectic_map(q, 42)
    assert _transformed_gram(q, M) == [list(r) for r in q.gram]
    assert random_symplectic_map(q, 1, count=0) == linalg.identity(GF8, 6)
    N = random_symplectic_map(q, 43)
    assert _transformed_gram(q, linalg.matmul(GF8, M, N)) == [list(r) for r in q.gram]


@given(st.integers(0, 2**32), st.sampled_from([GF2, GF4, GF8]), st.sampled_from([2, 4, 6]))
def test_sqrt_q_additive_on_lagrangian(seed, F, d):
    rng = random.Random(seed)
    q = random_form(F, d, rng)
    S = symplectic_basis(q)
    n = d // 2

    def comb():
        v = [0] * d
        for i in range(n):
            c = F.random(rng)
            v = [a ^ F.mul(c, b) for a, b in zip(v, S.e(i))]
        return v

    l1, l2 = comb(), comb()
    l12 = [a ^ b for a, b in zip(l1, l2)]
    assert F.sqrt(qf_eval(q, l12)) == F.sqrt(qf_eval(q, l1)) ^ F.sqrt(qf_eval(q, l2))


def test_linalg_nullspace_and_solve(rng):
    for _ in range(20):
        A = [[GF8.random(rng) for _ in range(5)] for _ in range(3)]
        for v in linalg.nullspace(GF8, A):
            assert linalg.matvec(GF8, A, v) == [0, 0, 0]
        x = [GF8.random(rng) for _ in range(5)]
        b = linalg.matvec(GF8, A, x)
        assert linalg.matvec(GF8, A, linalg.solve(GF8, A, b)) == b


def test_solve_gf2_brute_force(rng):
    for _ in range(50):
        cols = [rng.getrandbits(5) for _ in range(4)]
        rhs = rng.getrandbits(5)
        reach = {}
        for x in range(16):
            v = 0
            for j in range(4):
                if x >> j & 1:
                    v ^= cols[j]
            reach.setdefault(v, x)
        got = linalg.solve_gf2(cols, rhs)
        assert (got is None) == (rhs not in reach)
