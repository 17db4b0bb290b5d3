"""Wu vectors, the Arf invariant and Witt classes.

Two routes to the same invariant:

* Wu route (perfect fields). For a Lagrangian L of the polar form b, the
  map l -> sqrt(q(l)) is linear on L, so there is a vector w with
  b(w, l) = sqrt(q(l)) for all l in L (the sign is irrelevant in
  characteristic 2). The class of q(w) modulo {x^2 + x} is the invariant.
* Symplectic route (any field). In a symplectic basis e_i, f_i the sum
  q(e_1) q(f_1) + ... + q(e_n) q(f_n) gives the same class; no square
  roots are needed, so this works over F2(t).

Over F2(t) the two routes meet in the perfect-closure tower, which
:func:`arf_diagram_check` verifies.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import NamedTuple

from . import linalg
from .cokernel import ASClass, make_class
from .errors import (
    BudgetExceeded,
    ContextMismatch,
    DecompositionFailed,
    DegenerateForm,
    InconsistentInvariant,
    NotALagrangian,
)
from .func_field import TowerField, lemma0_forward
from .gf2n import BinaryField
from .quadform import QuadForm, qf_eval, qf_nondegenerate, qf_restrict, symplectic_basis

WITT_SCAN_BUDGET = 1 << 24


@dataclass(frozen=True)
class Lagrangian:
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(v) for v in self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def validate(self, q: QuadForm) -> None:
        F = q.field
        if 2 * self.dim != q.dim:
            raise NotALagrangian(f"need {q.dim // 2} basis vectors, got {self.dim}")
        if any(len(v) != q.dim for v in self.basis):
            raise NotALagrangian("basis vector length differs from form dimension")
        gl = [linalg.matvec(F, q.gram, v) for v in self.basis]
        for i, u in enumerate(self.basis):
            for g in gl[i + 1:]:
                if linalg.dot(F, u, g) != F.zero:
                    raise NotALagrangian("basis vectors are not mutually orthogonal")
        if self.dim and linalg.rank(F, [list(v) for v in self.basis]) != self.dim:
            raise NotALagrangian("basis vectors are linearly dependent")

    def elements(self, F):
        """All vectors of L (finite fields only)."""
        d = len(self.basis[0]) if self.basis else 0
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            v = [F.zero] * d
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            yield v


def is_q_lagrangian(q: QuadForm, L: Lagrangian) -> bool:
    """A b-Lagrangian on which q vanishes (checking the basis suffices, since
    q(x + y) = q(x) + q(y) + b(x, y) and b vanishes on L)."""
    L.validate(q)
    return all(qf_eval(q, v) == q.field.zero for v in L.basis)


@dataclass(frozen=True)
class WuVector:
    vector: tuple


class WittDecomposition(NamedTuple):
    hyperbolic_count: int
    anisotropic: QuadForm


@dataclass(frozen=True)
class WittClass:
    arf_bit: int
    n_residue: int


def q_lambda(F, lam) -> QuadForm:
    """The plane with q(e) = 1, b(e, f) = 1, q(f) = lam."""
    return QuadForm(F, [[F.zero, F.one], [F.one, F.zero]], [F.one, lam])


def hyperbolic(F) -> QuadForm:
    return QuadForm(F, [[F.zero, F.one], [F.one, F.zero]], [F.zero, F.zero])


def symplectic_lagrangian(q: QuadForm) -> Lagrangian:
    """span(e_1, ..., e_n) for the deterministic symplectic basis."""
    S = symplectic_basis(q)
    return Lagrangian([S.e(i) for i in range(S.n)])


def find_lagrangian(q: QuadForm, rng: random.Random | None = None) -> Lagrangian:
    """Grow an isotropic subspace one vector at a time.

    Any vector is b-isotropic (b is alternating), so adding a vector of
    L-perp outside L keeps L isotropic. Without ``rng`` the first suitable
    nullspace basis vector is taken; with ``rng`` a random element of
    L-perp is drawn.
    """
    F = q.field
    if not qf_nondegenerate(q):
        raise DegenerateForm("polar form is degenerate")
    d = q.dim
    basis: list = []
    while 2 * len(basis) < d:
        rows = [linalg.matvec(F, q.gram, v) for v in basis]
        perp = linalg.nullspace(F, rows, d)
        if rng is None:
            candidates = iter(perp)
        else:
            candidates = (_random_combination(F, perp, rng) for _ in itertools.count())
        for v in candidates:
            if linalg.rank(F, basis + [v]) > len(basis):
                basis.append(v)
                break
    return Lagrangian(basis)


def _random_combination(F, vectors, rng):
    d = len(vectors[0])
    out = [F.zero] * d
    for v in vectors:
        c = F.random(rng)
        out = [F.add(a, F.mul(c, b)) for a, b in zip(out, v)]
    return out


def wu_vector(q: QuadForm, L: Lagrangian) -> WuVector:
    """Solve b(w, l_i) = sqrt(q(l_i)) for the basis of L.

    The solution is unique only modulo L; the one returned has zero free
    coordinates under left-to-right pivoting.
    """
    F = q.field
    L.validate(q)
    if not qf_nondegenerate(q):
        raise DegenerateForm("polar form is degenerate")
    rows = [linalg.matvec(F, q.gram, l) for l in L.basis]
    rhs = [F.sqrt(qf_eval(q, l)) for l in L.basis]
    w = linalg.solve(F, rows, rhs) if rows else []
    if w is None:
        raise DegenerateForm("Wu system is inconsistent")  # impossible for nondegenerate b
    return WuVector(tuple(w))


def is_wu_vector(q: QuadForm, L: Lagrangian, w) -> bool:
    F = q.field
    vec = w.vector if isinstance(w, WuVector) else w
    return all(
        linalg.dot(F, vec, linalg.matvec(F, q.gram, l)) == F.sqrt(qf_eval(q, l)) for l in L.basis
    )


def lemma1_terms(q: QuadForm, w: WuVector, l):
    """(q(w + l), q(w) + P(sqrt(q(l)))); the two agree exactly when w is Wu for
    a Lagrangian containing l."""
    F = q.field
    wl = [F.add(a, b) for a, b in zip(w.vector, l)]
    return qf_eval(q, wl), F.add(qf_eval(q, w.vector), F.artin_schreier(F.sqrt(qf_eval(q, l))))


def lemma1_class(q: QuadForm, L: Lagrangian, w: WuVector, samples=None) -> ASClass:
    """Class of q(w), after checking the coset identity on ``samples``
    (default: the basis of L and its sum)."""
    F = q.field
    if samples is None:
        samples = list(L.basis)
        if L.basis:
            total = [F.zero] * q.dim
            for v in L.basis:
                total = [F.add(a, b) for a, b in zip(total, v)]
            samples.append(total)
    for l in samples:
        lhs, rhs = lemma1_terms(q, w, l)
        if lhs != rhs:
            raise InconsistentInvariant("q(w + l) differs from q(w) + P(sqrt q(l))")
    return make_class(F, qf_eval(q, w.vector))


def _require_perfect(q: QuadForm) -> None:
    if not isinstance(q.field, BinaryField):
        raise ContextMismatch(f"needs a binary field, got {q.field.spec}")


def parf(q: QuadForm) -> ASClass:
    """Wu-route invariant over GF(2^n)."""
    _require_perfect(q)
    L = symplectic_lagrangian(q)
    return make_class(q.field, qf_eval(q, wu_vector(q, L).vector))


def arf_sum(q: QuadForm, S=None):
    """q(e_1) q(f_1) + ... + q(e_n) q(f_n) in a symplectic basis."""
    F = q.field
    if S is None:
        S = symplectic_basis(q)
    s = F.zero
    for i in range(S.n):
        s = F.add(s, F.mul(qf_eval(q, S.e(i)), qf_eval(q, S.f(i))))
    return s


def arf_invariant(q: QuadForm) -> ASClass:
    return make_class(q.field, arf_sum(q))


def arf_diagram_check(q: QuadForm, m: int) -> bool:
    """Compare the F2(t) invariant pushed to level m with the Wu route at level m.

    The Wu route uses a Lagrangian found by nullspace growth, not the
    symplectic basis, so the two computations share only field arithmetic.
    """
    if not isinstance(q.field, TowerField) or q.field.level != 0:
        raise ContextMismatch(f"diagram check needs a form over f2t, got {q.field.spec}")
    pushed = lemma0_forward(arf_invariant(q).rep, m)
    K = TowerField(m)
    qK = QuadForm(K, q.gram, q.diag)
    w = wu_vector(qK, find_lagrangian(qK))
    return pushed == ASClass(K, qf_eval(qK, w.vector))


def common_wu_vector(q: QuadForm, L1: Lagrangian, L2: Lagrangian) -> WuVector:
    """A vector that is Wu for both L1 and L2.

    w1 - w2 is orthogonal to L1 cap L2, hence lies in L1 + L2; writing it
    as m1 + m2 with m_i in L_i, the vector w1 - m1 = w2 + m2 works.
    """
    F = q.field
    L1.validate(q)
    L2.validate(q)
    w1 = wu_vector(q, L1).vector
    w2 = wu_vector(q, L2).vector
    delta = [F.add(a, b) for a, b in zip(w1, w2)]
    span = list(L1.basis) + list(L2.basis)
    A = linalg.transpose(span) if span else []
    c = linalg.solve(F, A, delta) if span else []
    if c is None:
        raise DecompositionFailed("w1 - w2 is not in L1 + L2")
    w = list(w1)
    for ci, v in zip(c[: L1.dim], L1.basis):
        w = [F.add(a, F.mul(ci, b)) for a, b in zip(w, v)]
    if not (is_wu_vector(q, L1, w) and is_wu_vector(q, L2, w)):
        raise DecompositionFailed("constructed vector is not Wu for both Lagrangians")
    return WuVector(tuple(w))


def _scan_isotropic(q: QuadForm):
    """First nonzero v with q(v) = 0, in ascending encoding sum v_i |F|^i."""
    F = q.field
    for digits in itertools.product(F.elements(), repeat=q.dim):
        v = digits[::-1]
        if any(v) and qf_eval(q, v) == 0:
            return list(v)
    return None


def witt_decompose(q: QuadForm) -> WittDecomposition:
    """Split off hyperbolic planes found by exhaustive search for zeros of q."""
    _require_perfect(q)
    F = q.field
    if F.order ** q.dim > WITT_SCAN_BUDGET:
        raise BudgetExceeded(f"{F.order}^{q.dim} vectors exceed the scan budget")
    if not qf_nondegenerate(q):
        raise DegenerateForm("polar form is degenerate")
    count = 0
    cur = q
    while cur.dim:
        v = _scan_isotropic(cur)
        if v is None:
            break
        d = cur.dim
        gv = linalg.matvec(F, cur.gram, v)
        j = next(j for j in range(d) if gv[j] != 0)
        w = [0] * d
        w[j] = F.inv(gv[j])
        qw = qf_eval(cur, w)
        w = [F.add(a, F.mul(qw, b)) for a, b in zip(w, v)]
        gw = linalg.matvec(F, cur.gram, w)
        comp = []
        for i in range(d):
            # x + b(x, w) v + b(x, v) w for x the i-th basis vector
            x = [F.add(F.add(int(k == i), F.mul(gw[i], a)), F.mul(gv[i], b)) for k, (a, b) in enumerate(zip(v, w))]
            if linalg.rank(F, comp + [x]) > len(comp):
                comp.append(x)
            if len(comp) == d - 2:
                break
        cur = qf_restrict(cur, comp)
        count += 1
    return WittDecomposition(count, cur)


def witt_class(q: QuadForm) -> WittClass:
    bit = arf_invariant(q).bit
    dec = witt_decompose(q)
    if (bit == 0) != (dec.anisotropic.dim == 0):
        raise InconsistentInvariant(
            f"arf bit {bit} but anisotropic part of dimension {dec.anisotropic.dim}"
        )
    return WittClass(bit, dec.anisotropic.dim)
