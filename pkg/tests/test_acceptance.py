"""Acceptance criteria. Every comparison is exact; counts are the full sizes.

Run with ``pytest tests/test_acceptance.py -v`` to see one PASS/FAIL line
per criterion.
"""

import time

import pytest

from arfinv import checks

SEED = 0


@pytest.fixture
def report(capsys):
    def emit(label, results, elapsed):
        with capsys.disabled():
            ok = all(r.passed for r in results)
            print(f"\n{'PASS' if ok else 'FAIL'}  {label}  [{elapsed:.1f}s]")
            for r in results:
                print(f"      {r.line()}")
        return all(r.passed for r in results)

    return emit


def _run(report, label, *thunks):
    t = time.perf_counter()
    results = [f() for f in thunks]
    assert report(label, results, time.perf_counter() - t), [r.line() for r in results if not r.passed]


def test_c1_arf_basis_independence(report):
    _run(report, "C1 basis independence (GF(2),GF(4),GF(8); d=2..8; 200 each)",
         lambda: checks.basis_independence(SEED, count=200, fields=(1, 2, 3), dims=(2, 4, 6, 8)))


def test_c2_parf_surjectivity(report):
    _run(report, "C2 parf(q_lambda) = [lambda], n=1..4", lambda: checks.surjectivity(max_n=4))


def test_c3_parf_injectivity(report):
    _run(report, "C3 arf bit 0 <=> neutral (GF(2) d=2,4 exhaustive; 500 random GF(4)/GF(8))",
         lambda: checks.injectivity(SEED, count=500))


def test_c4_lemma1(report):
    _run(report, "C4 q(w+l) = q(w) + P(sqrt q(l)), 100 pairs per GF(2^n), n<=3",
         lambda: checks.lemma1_identity(SEED, count=100, fields=(1, 2, 3), max_points=1 << 12))


def test_c5_lemma0(report):
    _run(report, "C5 radicial descent (witness, injectivity, round trip)",
         lambda: checks.lemma0_witness(SEED, 200),
         lambda: checks.lemma0_injectivity(SEED, 200),
         lambda: checks.lemma0_round_trip(SEED, 200))


def test_c6_commutative_diagram(report):
    _run(report, "C6 diagram check, 100 forms each of dim 2 and 4 over F2(t)", lambda: checks.diagram(SEED, 100))


def test_c7_homomorphism(report):
    _run(report, "C7 Arf(q1+q2) = Arf(q1)+Arf(q2), 200 pairs over GF(4) and F2(t)",
         lambda: checks.homomorphism(SEED, 200))


def test_c8_zero_counts(report):
    _run(report, "C8 zero counts over GF(2), d=2,4,6, all forms", lambda: checks.zero_counts((2, 4, 6)))


def test_c9_as_member_completeness(report):
    _run(report, "C9 as_member vs brute force, 500 inputs", lambda: checks.as_member_completeness(SEED, 500))


def test_extra_route_checks(report):
    _run(report, "route agreement and common Wu vectors",
         lambda: checks.route_agreement(SEED, 200),
         lambda: checks.common_wu(SEED, 200),
         lambda: checks.field_axioms())
