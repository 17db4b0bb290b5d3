"""Property checks behind ``arfinv selftest`` and the acceptance tests.

Each check returns a :class:`CheckResult`; none of them raise on a failed
property. Counts default to the full acceptance sizes; ``scale`` shrinks
the randomized ones for quick runs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .arf import (
    Lagrangian,
    arf_diagram_check,
    arf_invariant,
    arf_sum,
    common_wu_vector,
    find_lagrangian,
    is_wu_vector,
    lemma1_terms,
    parf,
    q_lambda,
    witt_decompose,
    wu_vector,
)
from .cokernel import ASClass, make_class
from .errors import ArfError, DegenerateForm
from .func_field import (
    RatFunc,
    TowerElem,
    TowerField,
    as_member,
    lemma0_descend,
    lemma0_forward,
    random_ratfunc,
)
from .gf2n import binary_field
from .quadform import (
    QuadForm,
    SymplecticBasis,
    qf_base_change,
    qf_eval,
    qf_orth_sum,
    random_form,
    random_symplectic_map,
    symplectic_basis,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}: {self.cases} cases{extra}"


def _rng(seed, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _n(count: int, scale: float) -> int:
    return max(1, round(count * scale))


# ---------------------------------------------------------------- binary fields

def field_axioms(contexts=None) -> CheckResult:
    """Perfectness, Artin-Schreier kernel/image, trace vs as_solve, exhaustively."""
    if contexts is None:
        contexts = [binary_field(n) for n in range(1, 9)]
    cases = 0
    for F in contexts:
        elems = list(F.elements())
        for a in elems:
            cases += 1
            if F.sqrt(F.frobenius(a)) != a or F.frobenius(F.sqrt(a)) != a:
                return CheckResult("gf2n field axioms", False, cases, f"{F.spec}: Frobenius not bijective at {a}")
        kernel = [a for a in elems if F.artin_schreier(a) == 0]
        if kernel != [0, 1]:
            return CheckResult("gf2n field axioms", False, cases, f"{F.spec}: AS kernel {kernel}")
        solvable = 0
        for a in elems:
            x = F.as_solve(a)
            if x is not None:
                solvable += 1
                if F.artin_schreier(x) != a:
                    return CheckResult("gf2n field axioms", False, cases, f"{F.spec}: bad AS solution for {a}")
            if (x is not None) != (F.trace(a) == 0):
                return CheckResult("gf2n field axioms", False, cases, f"{F.spec}: trace disagrees at {a}")
        if solvable != len(elems) // 2:
            return CheckResult("gf2n field axioms", False, cases, f"{F.spec}: image size {solvable}")
    return CheckResult("gf2n field axioms", True, cases)


# ---------------------------------------------------------------- criterion 1

def basis_independence(seed=0, count=200, fields=(1, 2, 3), dims=(2, 4, 6, 8)) -> CheckResult:
    """Arf class unchanged under random symplectic base changes."""
    cases = 0
    for n in fields:
        F = binary_field(n)
        for d in dims:
            rng = _rng(seed, f"basis:{n}:{d}")
            for k in range(count):
                q = random_form(F, d, rng)
                a = arf_invariant(q)
                qs = qf_base_change(q, [list(r) for r in symplectic_basis(q).matrix])
                M = random_symplectic_map(qs, rng.getrandbits(64))
                if linalg.matmul(F, linalg.matmul(F, linalg.transpose(M), [list(r) for r in qs.gram]), M) != [
                    list(r) for r in qs.gram
                ]:
                    return CheckResult("basis independence", False, cases, f"{F.spec} d={d}: map not symplectic")
                q2 = qf_base_change(qs, M)
                cases += 1
                if arf_invariant(q2) != a or make_class(F, arf_sum(q2, _identity_basis(F, d))) != a:
                    return CheckResult("basis independence", False, cases, f"{F.spec} d={d} case {k}")
    return CheckResult("basis independence", True, cases)


def _identity_basis(F, d):
    return SymplecticBasis(tuple(tuple(r) for r in linalg.identity(F, d)))


# ---------------------------------------------------------------- criterion 2

def surjectivity(max_n: int = 4) -> CheckResult:
    cases = 0
    for n in range(1, max_n + 1):
        F = binary_field(n)
        for lam in F.elements():
            cases += 1
            if parf(q_lambda(F, lam)) != make_class(F, lam):
                return CheckResult("Parf surjectivity", False, cases, f"{F.spec}, lambda={lam}")
    return CheckResult("Parf surjectivity", True, cases)


# ---------------------------------------------------------------- criterion 3

def alternating_grams(F, d):
    """Every symmetric zero-diagonal d x d matrix over F."""
    slots = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for vals in itertools.product(F.elements(), repeat=len(slots)):
        g = [[F.zero] * d for _ in range(d)]
        for (i, j), v in zip(slots, vals):
            g[i][j] = g[j][i] = v
        yield g


def all_nondegenerate_forms(F, d):
    for g in alternating_grams(F, d):
        if not linalg.is_invertible(F, g):
            continue
        for diag in itertools.product(F.elements(), repeat=d):
            yield QuadForm(F, g, diag)


def injectivity(seed=0, count=500) -> CheckResult:
    """Arf bit 0 exactly when the Witt decomposition leaves nothing anisotropic."""
    cases = 0
    F2 = binary_field(1)
    for d in (2, 4):
        for q in all_nondegenerate_forms(F2, d):
            cases += 1
            if (arf_invariant(q).bit == 0) != (witt_decompose(q).anisotropic.dim == 0):
                return CheckResult("Parf injectivity", False, cases, f"GF(2) d={d}: {q}")
    rng = _rng(seed, "injectivity")
    for _ in range(count):
        F = binary_field(rng.choice((2, 3)))
        q = random_form(F, rng.choice((2, 4, 6)), rng)
        cases += 1
        if (arf_invariant(q).bit == 0) != (witt_decompose(q).anisotropic.dim == 0):
            return CheckResult("Parf injectivity", False, cases, f"{F.spec}: {q}")
    return CheckResult("Parf injectivity", True, cases)


# ---------------------------------------------------------------- criterion 4

def lemma1_identity(seed=0, count=100, fields=(1, 2, 3), max_points=1 << 12) -> CheckResult:
    """q(w + l) = q(w) + P(sqrt q(l)) for every l in random Lagrangians."""
    cases = 0
    points = 0
    for n in fields:
        F = binary_field(n)
        rng = _rng(seed, f"lemma1:{n}")
        dims = [d for d in (2, 4, 6, 8) if F.order ** (d // 2) <= max_points]
        for _ in range(count):
            q = random_form(F, rng.choice(dims), rng)
            L = find_lagrangian(q, rng)
            w = wu_vector(q, L)
            cases += 1
            for l in L.elements(F):
                points += 1
                lhs, rhs = lemma1_terms(q, w, l)
                if lhs != rhs:
                    return CheckResult("Lemma 1 coset identity", False, cases, f"{F.spec}: l={l}")
    return CheckResult("Lemma 1 coset identity", True, cases, f"{points} points")


# ---------------------------------------------------------------- criterion 5

def _random_tower(rng, max_level=3, max_deg=8):
    level = rng.randint(0, max_level)
    return TowerElem(level, random_ratfunc(rng, max_deg))


def lemma0_witness(seed=0, count=200) -> CheckResult:
    rng = _rng(seed, "lemma0:witness")
    for k in range(count):
        x = _random_tower(rng)
        y, w = lemma0_descend(x)
        if w * w + w + TowerElem(0, y) != x:
            return CheckResult("Lemma 0 descent witness", False, k + 1, str(x))
    return CheckResult("Lemma 0 descent witness", True, count)


def lemma0_injectivity(seed=0, count=200) -> CheckResult:
    rng = _rng(seed, "lemma0:inj")
    members = 0
    for k in range(count):
        f = random_ratfunc(rng, 8)
        if k % 2:
            # half the samples are forced into P(F2(t)) so both answers occur
            g = random_ratfunc(rng, 4)
            f = g * g + g
        base = as_member(TowerElem(0, f), 0) is not None
        members += base
        for m in (1, 2, 3):
            if (as_member(TowerElem(0, f), m) is not None) != base:
                return CheckResult("Lemma 0 injectivity", False, k + 1, f"{f} at level {m}")
    return CheckResult("Lemma 0 injectivity", True, count, f"{members} members")


def lemma0_round_trip(seed=0, count=200) -> CheckResult:
    rng = _rng(seed, "lemma0:roundtrip")
    for k in range(count):
        x = _random_tower(rng)
        y, _ = lemma0_descend(x)
        h = x.level
        if lemma0_forward(y, h) != ASClass(TowerField(h), x):
            return CheckResult("Lemma 0 round trip", False, k + 1, str(x))
    return CheckResult("Lemma 0 round trip", True, count)


# ---------------------------------------------------------------- criterion 6

def _random_ff_form(rng, d, max_deg=4):
    K = TowerField(0)
    return random_form(K, d, rng, max_deg=max_deg)


def diagram(seed=0, count=100) -> CheckResult:
    rng = _rng(seed, "diagram")
    cases = 0
    for d in (2, 4):
        for _ in range(count):
            q = _random_ff_form(rng, d)
            m = rng.choice((1, 2))
            cases += 1
            if not arf_diagram_check(q, m):
                return CheckResult("commutative diagram", False, cases, f"d={d} m={m}")
    return CheckResult("commutative diagram", True, cases)


# ---------------------------------------------------------------- criterion 7

def homomorphism(seed=0, count=200) -> CheckResult:
    rng = _rng(seed, "hom")
    F4 = binary_field(2)
    K = TowerField(0)
    cases = 0
    for _ in range(count):
        q1 = random_form(F4, rng.choice((2, 4)), rng)
        q2 = random_form(F4, rng.choice((2, 4)), rng)
        cases += 1
        if arf_invariant(qf_orth_sum(q1, q2)) != arf_invariant(q1) + arf_invariant(q2):
            return CheckResult("Arf homomorphism", False, cases, "GF(4)")
    for _ in range(count):
        q1 = _random_ff_form(rng, rng.choice((2, 4)))
        q2 = _random_ff_form(rng, 2)
        cases += 1
        if arf_invariant(qf_orth_sum(q1, q2)) != arf_invariant(q1) + arf_invariant(q2):
            return CheckResult("Arf homomorphism", False, cases, K.spec)
    return CheckResult("Arf homomorphism", True, cases)


# ---------------------------------------------------------------- criterion 8

def _zero_count_expected(d, bit):
    n = d // 2
    return 2 ** (2 * n - 1) + (-1) ** bit * 2 ** (n - 1)


def zero_counts(dims=(2, 4, 6)) -> CheckResult:
    """Number of zeros of q over GF(2)^d against the Arf bit, all forms.

    Per alternating gram the symplectic basis is computed once; the 2^d
    diagonals are then handled together, using q_diag(x) = q_0(x) + <diag, x>
    over GF(2) (x_i^2 = x_i).
    """
    F = binary_field(1)
    cases = 0
    for d in dims:
        X = np.array(list(itertools.product((0, 1), repeat=d)), dtype=np.int64)  # all vectors
        D = X  # all diagonals, same enumeration
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        PX = np.array([[x[i] * x[j] for i, j in pairs] for x in X], dtype=np.int64).reshape(len(X), len(pairs))
        for g in alternating_grams(F, d):
            q0 = QuadForm(F, g, [0] * d)
            try:
                S = symplectic_basis(q0)
            except DegenerateForm:
                continue
            gv = np.array([g[i][j] for i, j in pairs], dtype=np.int64)
            q0_all = PX @ gv if pairs else np.zeros(len(X), dtype=np.int64)
            values = (q0_all[None, :] + D @ X.T) % 2  # row: diagonal, column: vector
            zeros = (values == 0).sum(axis=1)
            bits = np.zeros(len(D), dtype=np.int64)
            for i in range(S.n):
                e, f = np.array(S.e(i)), np.array(S.f(i))
                qe = (qf_eval(q0, S.e(i)) + D @ e) % 2
                qf = (qf_eval(q0, S.f(i)) + D @ f) % 2
                bits ^= qe & qf
            expected = np.where(bits == 0, _zero_count_expected(d, 0), _zero_count_expected(d, 1))
            cases += len(D)
            if not np.array_equal(zeros, expected):
                return CheckResult("zero counts", False, cases, f"d={d} gram={g}")
    return CheckResult("zero counts", True, cases)


# ---------------------------------------------------------------- criterion 9

def brute_force_member(x: RatFunc, max_num_deg=4, max_den_deg=2):
    """All c = P/Q with deg P <= 4, deg Q <= 2 and c^2 + c = x."""
    found = set()
    for Q in range(1, 1 << (max_den_deg + 1)):
        for P in range(1 << (max_num_deg + 1)):
            c = RatFunc(P, Q)
            if c * c + c == x:
                found.add(c)
    return found


def as_member_completeness(seed=0, count=500) -> CheckResult:
    rng = _rng(seed, "as_member")
    members = 0
    for k in range(count):
        if k % 2:
            c = RatFunc(rng.getrandbits(5), rng.randrange(1, 8))
            x = c * c + c
        else:
            # deg num <= 8, deg den <= 4 keeps every solution inside the search box
            x = RatFunc(rng.getrandbits(9), rng.randrange(1, 32))
        got = as_member(TowerElem(0, x), 0)
        brute = brute_force_member(x)
        members += bool(brute)
        if (got is not None) != bool(brute):
            return CheckResult("as_member completeness", False, k + 1, str(x))
        if got is not None and (got.value not in brute or got * got + got != TowerElem(0, x)):
            return CheckResult("as_member completeness", False, k + 1, f"bad witness for {x}")
    return CheckResult("as_member completeness", True, count, f"{members} members")


# ---------------------------------------------------------------- extra route checks

def route_agreement(seed=0, count=200) -> CheckResult:
    """Wu route equals the symplectic sum; sum sqrt(q(e_i)) f_i is a Wu vector."""
    rng = _rng(seed, "routes")
    for k in range(count):
        F = binary_field(rng.choice((1, 2, 3, 4)))
        d = rng.choice((2, 4, 6))
        q = random_form(F, d, rng)
        S = symplectic_basis(q)
        if parf(q) != arf_invariant(q):
            return CheckResult("Wu route = symplectic route", False, k + 1, F.spec)
        w = [F.zero] * d
        for i in range(S.n):
            c = F.sqrt(qf_eval(q, S.e(i)))
            w = [F.add(a, F.mul(c, b)) for a, b in zip(w, S.f(i))]
        L = Lagrangian([S.e(i) for i in range(S.n)])
        if not is_wu_vector(q, L, w) or make_class(F, qf_eval(q, w)) != arf_invariant(q):
            return CheckResult("Wu route = symplectic route", False, k + 1, "explicit Wu vector")
    return CheckResult("Wu route = symplectic route", True, count)


def common_wu(seed=0, count=200) -> CheckResult:
    rng = _rng(seed, "commonwu")
    for k in range(count):
        F = binary_field(rng.choice((1, 2, 3)))
        q = random_form(F, rng.choice((2, 4, 6)), rng)
        L1, L2 = find_lagrangian(q, rng), find_lagrangian(q, rng)
        try:
            w = common_wu_vector(q, L1, L2)
        except ArfError as e:
            return CheckResult("common Wu vector", False, k + 1, str(e))
        c1 = make_class(F, qf_eval(q, wu_vector(q, L1).vector))
        c2 = make_class(F, qf_eval(q, wu_vector(q, L2).vector))
        if not (is_wu_vector(q, L1, w) and is_wu_vector(q, L2, w)) or c1 != c2:
            return CheckResult("common Wu vector", False, k + 1, F.spec)
    return CheckResult("common Wu vector", True, count)


# ---------------------------------------------------------------- suites

SUITE_ORDER = ("gf2n", "Lemme 0", "Lemme 1", "Proposition", "Théorème de Arf")


def run_suites(seed=0, scale: float = 1.0, gf2n_contexts=None) -> dict[str, list[CheckResult]]:
    s = scale
    return {
        "gf2n": [field_axioms(gf2n_contexts)],
        "Lemme 0": [
            lemma0_witness(seed, _n(200, s)),
            lemma0_injectivity(seed, _n(200, s)),
            lemma0_round_trip(seed, _n(200, s)),
            as_member_completeness(seed, _n(500, s)),
        ],
        "Lemme 1": [lemma1_identity(seed, _n(100, s))],
        "Proposition": [
            surjectivity(),
            injectivity(seed, _n(500, s)),
            homomorphism(seed, _n(200, s)),
            common_wu(seed, _n(200, s)),
        ],
        "Théorème de Arf": [
            basis_independence(seed, _n(200, s)),
            route_agreement(seed, _n(200, s)),
            diagram(seed, _n(100, s)),
            zero_counts((2, 4, 6) if s >= 1 else (2, 4)),
        ],
    }
