"""Acceptance criteria, one check per criterion.

Run directly for a pass/fail report:

    python tests/test_acceptance.py

Under pytest each criterion is a test; the report line is printed as well
(visible with ``-s``).
"""

from __future__ import annotations

import math
import os
import random
import sys
import time

import pytest
from gmpy2 import mpq

sys.path.insert(0, os.path.dirname(__file__))

from hermitia import polynomial as P  # noqa: E402
from hermitia.errors import HermitiaError  # noqa: E402
from hermitia.exact import ComplexMatrix, G  # noqa: E402
from hermitia.forms import (  # noqa: E402
    HermitianForm,
    interleave,
    leading_minors,
    realify_form,
    realify_map,
    transform,
)
from hermitia.foursquares import find_alpha_beta, four_squares, hermite_quaternary, hermite_reformulated  # noqa: E402
from hermitia.geometry import affine_action, fubini_R, study_distance, study_q, unit_ball_form  # noqa: E402
from hermitia.groups import (  # noqa: E402
    element_order,
    finite_order_normal_form,
    group_closure,
    modulus_one_check,
    moore_average,
)
from hermitia.reduction import lattice_minimum, reduce_binary, within_hermite_bound  # noqa: E402

from helpers import (  # noqa: E402
    cayley_unitary,
    permutation_matrix,
    rand_gaussian,
    rand_hermitian,
    rand_invertible,
    rand_pd_binary_integral,
    rand_pd_quadratic,
)

ROT = ComplexMatrix([[0, -1], [1, 0]])
QUAT_J = ComplexMatrix([["i", 0], [0, "-i"]])
T_FIXTURE = ComplexMatrix([[0, -2], ["1/2", 0]])


def report(number: int, title: str, ok: bool, detail: str) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
    return ok


def criterion_1(limit: int = 100_000, budget: float = 120.0) -> bool:
    start = time.perf_counter()
    bad = [A for A in range(1, limit + 1) if sum(s * s for s in four_squares(A).squares) != A]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < budget
    return report(1, "four-squares sweep", ok, f"A in [1, {limit}], {len(bad)} failures, {elapsed:.1f}s of {budget:.0f}s")


def criterion_2(samples: int = 1000) -> bool:
    rng = random.Random(1002)
    violations = 0
    for _ in range(samples):
        n = rng.randint(2, 5)
        f = rand_pd_quadratic(rng, n, bound=50)
        w = lattice_minimum(f)
        if not within_hermite_bound(w.value, n, f.determinant()) or f.evaluate(w.vector) != w.value:
            violations += 1
    return report(2, "Hermite bound", violations == 0, f"{samples} forms in 2-5 variables, {violations} violations")


def criterion_3(limit: int = 2000) -> bool:
    bad = 0
    count = 0
    for A in range(1, limit + 1):
        if A % 4 == 0:
            continue
        al, be = find_alpha_beta(A)
        count += 1
        if hermite_quaternary(A, al, be).determinant() != A**4 or hermite_reformulated(A, al, be).determinant() != 1:
            bad += 1
    return report(3, "quaternary determinant", bad == 0, f"{count} values of A, {bad} failures")


def criterion_4(samples: int = 1000) -> bool:
    rng = random.Random(1004)
    bad = 0
    for _ in range(samples):
        f = rand_pd_binary_integral(rng, 10_000)
        r = reduce_binary(f)
        (a, b), (_, c) = r.reduced.gram
        U = ComplexMatrix([list(row) for row in r.unimodular])
        ok = (
            abs(2 * b) <= a <= c
            and a * a <= mpq(4, 3) * f.determinant()
            and U.det().norm() == 1
            and transform(f, U) == r.reduced
        )
        bad += not ok
    return report(4, "Gauss reduction", bad == 0, f"{samples} binary forms, {bad} failures")


def _symmetric_generators(n):
    return [permutation_matrix([1, 0] + list(range(2, n))), permutation_matrix([(i + 1) % n for i in range(n)])]


def fixture_groups(conjugates: int = 20):
    base = [
        ("trivial", [ComplexMatrix.identity(2)], 1),
        ("minus identity", [ComplexMatrix.identity(2).scale(-1)], 2),
        ("rotation", [ROT], 4),
        ("T fixture", [T_FIXTURE], 4),
        ("quaternion", [ROT, QUAT_J], 8),
        ("S3", _symmetric_generators(3), 6),
        ("S4", _symmetric_generators(4), 24),
        ("S5", _symmetric_generators(5), 120),
    ]
    rng = random.Random(1005)
    out = [(name, group_closure(gens), order) for name, gens, order in base]
    small = base[:6]
    for k in range(conjugates):
        name, gens, order = small[k % len(small)]
        n = gens[0].rows
        S = rand_invertible(rng, n, 2)
        Sinv = S.inverse()
        out.append((f"{name} conjugate {k}", group_closure([Sinv @ g @ S for g in gens]), order))
    return out


def criterion_5(groups=None) -> bool:
    groups = groups or fixture_groups()
    problems = []
    for name, grp, order in groups:
        form = moore_average(grp).form
        if grp.order != order:
            problems.append(f"{name}: order {grp.order}")
        if form.gram.conj_transpose() != form.gram:
            problems.append(f"{name}: not Hermitian")
        if any(m <= 0 for m in leading_minors(form)):
            problems.append(f"{name}: not positive definite")
        if any(transform(form, g) != form for g in grp):
            problems.append(f"{name}: not invariant")
    fixture = moore_average(group_closure([T_FIXTURE])).form
    if fixture != HermitianForm.diagonal([mpq(5, 8), mpq(5, 2)]):
        problems.append("T fixture form differs from diag(5/8, 5/2)")
    detail = f"{len(groups)} groups" + (f"; {problems[:3]}" if problems else ", T fixture gives diag(5/8, 5/2)")
    return report(5, "Moore averaging", not problems, detail)


def criterion_6(groups=None, tol: float = 1e-9) -> bool:
    groups = groups or fixture_groups()
    worst = 0.0
    failures = 0
    elements = 0
    for _, grp, _ in groups:
        form = moore_average(grp).form
        for g in grp:
            elements += 1
            rep = modulus_one_check(g, form, tol=tol)
            worst = max(worst, rep.max_deviation)
            cert = finite_order_normal_form(g, element_order(g))
            if not (rep.passed and cert.divides and cert.squarefree):
                failures += 1
    ok = failures == 0 and worst < tol
    return report(6, "Loewy criterion", ok, f"{elements} elements, max deviation {worst:.3g}, {failures} failures")


def _block_diag(blocks):
    n = sum(b.rows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[k + i][k + j] = b[i, j]
        k += b.rows
    return ComplexMatrix(rows)


def _random_finite_order(rng):
    blocks = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["perm", "rot", "sign", "i"])
        if kind == "perm":
            m = rng.randint(2, 3)
            perm = list(range(m))
            rng.shuffle(perm)
            blocks.append(permutation_matrix(perm))
        elif kind == "rot":
            blocks.append(ROT)
        elif kind == "sign":
            blocks.append(ComplexMatrix([[rng.choice([1, -1])]]))
        else:
            blocks.append(ComplexMatrix([[rng.choice([G(0, 1), G(0, -1)])]]))
    D = _block_diag(blocks)
    S = rand_invertible(rng, D.rows, 2)
    return S.inverse() @ D @ S


def criterion_7(samples: int = 200) -> bool:
    rng = random.Random(1007)
    bad = 0
    for _ in range(samples):
        T = _random_finite_order(rng)
        p = element_order(T, limit=12)
        cert = finite_order_normal_form(T, p)
        bad += not (cert.divides and cert.squarefree)
    try:
        finite_order_normal_form([[1, 1], [0, 1]], 6)
        rejected = False
    except HermitiaError as exc:
        rejected = exc.code == "not-finite-order"
    ok = bad == 0 and rejected
    return report(7, "finite-order normal form", ok, f"{samples} matrices, {bad} failures, unipotent rejected: {rejected}")


def criterion_8(maps: int = 50) -> bool:
    H = HermitianForm.diagonal([1, -1, -1])
    d = study_distance((1, 0, 0), (2, 1, 0), H)
    err = abs(d.distance - math.log(3))
    scaled = study_distance((1, 0, 0), (4, 2, 0), H) == d and study_distance((G(0, 3), 0, 0), (2, 1, 0), H) == d
    rng = random.Random(1008)
    moved = 0
    for _ in range(maps):
        T = cayley_unitary(rng, H)
        assert transform(H, T) == H
        while True:
            x = [G(1)] + [G(mpq(rng.randint(-9, 9), 10), mpq(rng.randint(-9, 9), 10)) for _ in range(2)]
            y = [G(1)] + [G(mpq(rng.randint(-9, 9), 10), mpq(rng.randint(-9, 9), 10)) for _ in range(2)]
            if H.evaluate(x) > 0 and H.evaluate(y) > 0:
                break
        moved += study_q(T.apply(x), T.apply(y), H) != study_q(x, y, H)
    ok = err < 1e-12 and d.q == mpq(4, 3) and scaled and moved == 0
    detail = f"|d - ln 3| = {err:.2g}, q = 4/3, {maps} maps with {moved} q changes, rescaling invariant: {scaled}"
    return report(8, "Study distance", ok, detail)


def _interior(rng, k):
    while True:
        u = [G(mpq(rng.randint(-19, 19), 20), mpq(rng.randint(-19, 19), 20)) for _ in range(k)]
        if sum(z.norm() for z in u) < 1:
            return u


def criterion_9(samples: int = 1000) -> bool:
    rng = random.Random(1009)
    bad = 0
    for _ in range(samples):
        k = rng.randint(1, 3)
        u = _interior(rng, k)
        w = list(u) if rng.random() < 0.1 else _interior(rng, k)
        R = fubini_R(u, w)  # the function asserts a zero imaginary part internally
        bad += not (R >= 0 and (R == 0) == (u == w) and fubini_R(w, u) == R)
    invariant = True
    for _ in range(50):
        k = rng.randint(1, 2)
        J = unit_ball_form(k)
        T = cayley_unitary(rng, J)
        u, w = _interior(rng, k), _interior(rng, k)
        invariant &= fubini_R(affine_action(T, u), affine_action(T, w)) == fubini_R(u, w)
    fixture = fubini_R([mpq(1, 2)], [0])
    ok = bad == 0 and invariant and fixture == mpq(1, 3)
    return report(9, "Fubini R", ok, f"{samples} pairs, {bad} failures, fixture R = {fixture}, invariant: {invariant}")


def criterion_10(samples: int = 1000) -> bool:
    rng = random.Random(1010)
    bad = 0
    for _ in range(samples):
        n = rng.randint(1, 4)
        h = rand_hermitian(rng, n)
        v = [rand_gaussian(rng) for _ in range(n)]
        bad += h.evaluate(v) != realify_form(h).evaluate(interleave(v))
    not_mult = 0
    for _ in range(200):
        n = rng.randint(1, 3)
        S, T = rand_invertible(rng, n, 4), rand_invertible(rng, n, 4)
        not_mult += realify_map(S @ T) != realify_map(S) @ realify_map(T)
    ok = bad == 0 and not_mult == 0
    return report(10, "realification", ok, f"{samples} pairs with {bad} mismatches, 200 products with {not_mult} mismatches")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.fixture(scope="module")
def groups():
    return fixture_groups()


@pytest.mark.slow
def test_criterion_1_four_squares_sweep():
    assert criterion_1()


def test_criterion_2_hermite_bound():
    assert criterion_2()


def test_criterion_3_quaternary_determinant():
    assert criterion_3()


def test_criterion_4_gauss_reduction():
    assert criterion_4()


def test_criterion_5_moore_averaging(groups):
    assert criterion_5(groups)


def test_criterion_6_loewy(groups):
    assert criterion_6(groups)


def test_criterion_7_finite_order():
    assert criterion_7()


def test_criterion_8_study_distance():
    assert criterion_8()


def test_criterion_9_fubini():
    assert criterion_9()


def test_criterion_10_realification():
    assert criterion_10()


def main() -> int:
    groups = fixture_groups()
    results = []
    for check in CRITERIA:
        if check in (criterion_5, criterion_6):
            results.append(check(groups))
        else:
            results.append(check())
    passed = sum(results)
    print(f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
