"""Random generators and brute-force oracles shared by the test modules."""

from __future__ import annotations

import itertools
import math
import random

from gmpy2 import mpq

from hermitia.exact import ComplexMatrix, G
from hermitia.forms import HermitianForm, QuadraticForm, leading_minors


def rand_rational(rng: random.Random, bound: int = 50, nonzero: bool = False) -> mpq:
    while True:
        x = mpq(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def rand_gaussian(rng: random.Random, bound: int = 9):
    return G(rand_rational(rng, bound), rand_rational(rng, bound))


def rand_complex_matrix(rng: random.Random, n: int, bound: int = 5) -> ComplexMatrix:
    return ComplexMatrix([[rand_gaussian(rng, bound) for _ in range(n)] for _ in range(n)])


def rand_invertible(rng: random.Random, n: int, bound: int = 3) -> ComplexMatrix:
    while True:
        m = rand_complex_matrix(rng, n, bound)
        if m.det():
            return m


def rand_hermitian(rng: random.Random, n: int, bound: int = 9) -> HermitianForm:
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = G(rand_rational(rng, bound))
        for j in range(i + 1, n):
            z = rand_gaussian(rng, bound)
            rows[i][j], rows[j][i] = z, z.conj()
    return HermitianForm(rows)


def rand_pd_quadratic(rng: random.Random, n: int, bound: int = 50) -> QuadraticForm:
    """Symmetric rational Gram matrix with numerators and denominators ≤ bound, positive definite."""
    while True:
        g = [[mpq(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                x = mpq(rng.randint(-bound, bound), rng.randint(1, bound))
                g[i][j] = g[j][i] = x
        for i in range(n):
            g[i][i] = mpq(rng.randint(1, bound), rng.randint(1, 3))
        f = QuadraticForm(g)
        if all(m > 0 for m in leading_minors(f)):
            return f


def rand_pd_binary_integral(rng: random.Random, size: int = 1000) -> QuadraticForm:
    while True:
        a, c = rng.randint(1, size), rng.randint(1, size)
        two_b = rng.randint(-size, size)
        if 4 * a * c - two_b * two_b > 0:
            return QuadraticForm.binary(a, two_b, c)


def brute_minimum(f: QuadraticForm):
    """Minimum over the box |x_i| ≤ √(C·(G⁻¹)_ii), C the least diagonal entry.

    The box is sound because ``min {f(x) : x_i = t} = t² / (G⁻¹)_ii``.
    Returns (value, all minimizers).
    """
    n = f.dim
    inv = f.as_matrix().inverse()
    C = min(f.gram[i][i] for i in range(n))
    ranges = []
    for i in range(n):
        r = C * inv[i, i].re
        k = math.isqrt(int(r.numerator // r.denominator)) + 1
        while k * k > r:
            k -= 1
        ranges.append(range(-k, k + 1))
    best, arg = None, []
    for v in itertools.product(*ranges):
        if not any(v):
            continue
        val = f.evaluate(v)
        if best is None or val < best:
            best, arg = val, [v]
        elif val == best:
            arg.append(v)
    return best, arg


def box_size(f: QuadraticForm) -> int:
    inv = f.as_matrix().inverse()
    C = min(f.gram[i][i] for i in range(f.dim))
    size = 1
    for i in range(f.dim):
        size *= 2 * math.isqrt(int(C * inv[i, i].re)) + 3
    return size


def brute_alpha_beta(A: int):
    """Scan β for each α against a table of squares mod A."""
    squares = {}
    for b in range(A):
        squares.setdefault(b * b % A, b)
    for a in range(A):
        b = squares.get((-1 - a * a) % A)
        if b is not None:
            return a, b
    return None


def permutation_matrix(perm) -> ComplexMatrix:
    n = len(perm)
    return ComplexMatrix([[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)])


def cayley_unitary(rng: random.Random, J: HermitianForm, bound: int = 4) -> ComplexMatrix:
    """Random T with transform(J, T) = J, via a Cayley transform.

    Here ``transform`` is ``Tᵀ J conj(T)``, equivalently ``T* J T = J`` for real J.
    With ``A = J⁻¹K`` and ``K`` skew-Hermitian, ``T = (I − A)⁻¹(I + A)`` satisfies it.
    """
    n = J.dim
    Jinv = J.gram.inverse()
    while True:
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = G(0, rand_rational(rng, bound))
            for j in range(i + 1, n):
                z = rand_gaussian(rng, bound)
                rows[i][j], rows[j][i] = z, -z.conj()
        A = Jinv @ ComplexMatrix(rows)
        ident = ComplexMatrix.identity(n)
        M = ident - A
        if M.det():
            return M.inverse() @ (ident + A)
