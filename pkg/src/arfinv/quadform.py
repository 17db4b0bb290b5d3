"""Quadratic forms in characteristic 2, stored as (gram, diag).

``gram[i][j]`` is the polar form b(v_i, v_j) = q(v_i + v_j) - q(v_i) - q(v_j),
``diag[i]`` is q(v_i). In characteristic 2 the polar form is alternating,
so gram is symmetric with zero diagonal, and

    q(sum x_i v_i) = sum x_i^2 q(v_i) + sum_{i<j} x_i x_j b(v_i, v_j).

Vectors and matrices are plain lists; matrix columns are basis vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from . import linalg
from .errors import ContextMismatch, DegenerateForm, DimensionMismatch, InvalidForm, SingularMatrix


@dataclass(frozen=True)
class QuadForm:
    field: Any
    gram: tuple
    diag: tuple

    def __post_init__(self):
        gram = tuple(tuple(row) for row in self.gram)
        diag = tuple(self.diag)
        d = len(diag)
        if len(gram) != d or any(len(row) != d for row in gram):
            raise InvalidForm(f"gram must be {d}x{d} to match diag")
        z = self.field.zero
        for i in range(d):
            if gram[i][i] != z:
                raise InvalidForm(f"gram diagonal entry {i} is nonzero; polar form must be alternating")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InvalidForm(f"gram is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "diag", diag)

    @property
    def dim(self) -> int:
        return len(self.diag)

    def __call__(self, x):
        return qf_eval(self, x)


def qf_eval(q: QuadForm, x):
    if len(x) != q.dim:
        raise DimensionMismatch(f"vector of length {len(x)} for form of dim {q.dim}")
    F = q.field
    s = F.zero
    for i, xi in enumerate(x):
        if xi == F.zero:
            continue
        s = F.add(s, F.mul(F.mul(xi, xi), q.diag[i]))
        row = q.gram[i]
        for j in range(i + 1, q.dim):
            if x[j] != F.zero and row[j] != F.zero:
                s = F.add(s, F.mul(F.mul(xi, x[j]), row[j]))
    return s


def qf_polar(q: QuadForm, x, y):
    """x^T gram y."""
    if len(x) != q.dim or len(y) != q.dim:
        raise DimensionMismatch("vector length does not match form dimension")
    F = q.field
    return linalg.dot(F, x, linalg.matvec(F, q.gram, y))


def qf_polar_from_values(q: QuadForm, x, y):
    """q(x+y) + q(x) + q(y), the defining expression of the polar form."""
    F = q.field
    xy = [F.add(a, b) for a, b in zip(x, y)]
    return F.add(F.add(qf_eval(q, xy), qf_eval(q, x)), qf_eval(q, y))


def qf_nondegenerate(q: QuadForm) -> bool:
    return linalg.is_invertible(q.field, [list(r) for r in q.gram])


def qf_orth_sum(q1: QuadForm, q2: QuadForm) -> QuadForm:
    if q1.field != q2.field:
        raise ContextMismatch(f"{q1.field.spec} vs {q2.field.spec}")
    z = q1.field.zero
    d1, d2 = q1.dim, q2.dim
    gram = [list(r) + [z] * d2 for r in q1.gram] + [[z] * d1 + list(r) for r in q2.gram]
    return QuadForm(q1.field, gram, q1.diag + q2.diag)


def empty_form(F) -> QuadForm:
    return QuadForm(F, (), ())


def qf_restrict(q: QuadForm, columns) -> QuadForm:
    """The form x -> q(sum x_k c_k) on the span of the given column vectors."""
    F = q.field
    cols = [list(c) for c in columns]
    Gc = [linalg.matvec(F, q.gram, c) for c in cols]
    gram = [[linalg.dot(F, ci, gc) for gc in Gc] for ci in cols]
    return QuadForm(F, gram, [qf_eval(q, c) for c in cols])


def qf_base_change(q: QuadForm, M) -> QuadForm:
    """q'(x) = q(M x)."""
    if len(M) != q.dim or any(len(row) != q.dim for row in M):
        raise DimensionMismatch(f"base change must be {q.dim}x{q.dim}")
    if not linalg.is_invertible(q.field, M):
        raise SingularMatrix("base change matrix is singular")
    return qf_restrict(q, linalg.transpose(M))


@dataclass(frozen=True)
class SymplecticBasis:
    """Columns e_1, f_1, ..., e_n, f_n of ``matrix``."""

    matrix: tuple

    def e(self, i: int):
        return [row[2 * i] for row in self.matrix]

    def f(self, i: int):
        return [row[2 * i + 1] for row in self.matrix]

    @property
    def n(self) -> int:
        return len(self.matrix) // 2


def standard_symplectic_gram(F, d: int):
    g = [[F.zero] * d for _ in range(d)]
    for i in range(0, d - 1, 2):
        g[i][i + 1] = g[i + 1][i] = F.one
    return g


def symplectic_basis(q: QuadForm) -> SymplecticBasis:
    """Symplectic basis of the polar form by Gram-Schmidt-style splitting.

    Take the lowest-index remaining vector v and its lowest-index partner w
    with b(v, w) != 0, rescale w so that b(v, w) = 1, project the rest onto
    the orthogonal complement of span(v, w) and repeat.
    """
    F = q.field
    d = q.dim
    G = q.gram
    z = F.zero
    work = [[F.one if i == j else z for i in range(d)] for j in range(d)]
    # cache G*v so each pairing is a single dot product
    gwork = [list(G[j]) for j in range(d)]
    cols = []
    while work:
        v, gv = work[0], gwork[0]
        k = next((k for k in range(1, len(work)) if linalg.dot(F, work[k], gv) != z), None)
        if k is None:
            raise DegenerateForm("polar form is degenerate")
        s = F.inv(linalg.dot(F, work[k], gv))
        w = [F.mul(s, a) for a in work[k]]
        gw = [F.mul(s, a) for a in gwork[k]]
        cols += [v, w]
        rest, grest = [], []
        for j in range(1, len(work)):
            if j == k:
                continue
            x, gx = work[j], gwork[j]
            bxw = linalg.dot(F, x, gw)
            bxv = linalg.dot(F, x, gv)
            x = [F.add(F.add(a, F.mul(bxw, b)), F.mul(bxv, c)) for a, b, c in zip(x, v, w)]
            gx = [F.add(F.add(a, F.mul(bxw, b)), F.mul(bxv, c)) for a, b, c in zip(gx, gv, gw)]
            rest.append(x)
            grest.append(gx)
        work, gwork = rest, grest
    return SymplecticBasis(tuple(tuple(r) for r in linalg.transpose(cols)) if cols else ())


def random_symplectic_map(q: QuadForm, seed, count: int | None = None):
    """Product of random symplectic transvections x -> x + c b(x, v) v.

    Every transvection preserves an alternating form, so the product M
    satisfies M^T gram M = gram exactly. ``count`` defaults to 2*dim.
    """
    F = q.field
    d = q.dim
    rng = random.Random(seed)
    if count is None:
        count = 2 * d
    M = linalg.identity(F, d)
    for _ in range(count):
        v = [F.random(rng) for _ in range(d)]
        c = F.random(rng)
        gv = linalg.matvec(F, q.gram, v)  # b(x, v) = x . gv
        # T = I + c v gv^T
        T = [[F.add(F.one if i == j else F.zero, F.mul(c, F.mul(v[i], gv[j]))) for j in range(d)]
             for i in range(d)]
        M = linalg.matmul(F, T, M)
    return M


def random_form(F, d: int, rng: random.Random, nondegenerate: bool = True, **kw) -> QuadForm:
    """Uniform-ish random form; rejection-samples the gram when asked."""
    while True:
        gram = [[F.zero] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                gram[i][j] = gram[j][i] = F.random(rng, **kw)
        if not nondegenerate or linalg.is_invertible(F, gram):
            break
    diag = [F.random(rng, **kw) for _ in range(d)]
    return QuadForm(F, gram, diag)


def random_invertible(F, d: int, rng: random.Random, **kw):
    while True:
        M = [[F.random(rng, **kw) for _ in range(d)] for _ in range(d)]
        if linalg.is_invertible(F, M):
            return M
