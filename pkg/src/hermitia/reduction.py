"""Binary reduction, exact lattice minima, and the Hermite bound.

Everything here is exact: enumeration boxes come from rational
completions of squares, never from floating-point pruning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .errors import HermitiaError
from .forms import QuadraticForm, congruence_diagonal, transform
from .exact import Q, Rational

DEFAULT_DIM_CAP = 8

FOUR_THIRDS = mpq(4, 3)


@dataclass(frozen=True)
class ReductionResult:
    reduced: QuadraticForm
    unimodular: tuple[tuple[int, int], tuple[int, int]]
    steps: int


@dataclass(frozen=True)
class MinimumWitness:
    value: Rational
    vector: tuple[int, ...]


def _require_positive_definite(f: QuadraticForm) -> None:
    pivots = congruence_diagonal(f)
    if len(pivots) < f.dim or any(p <= 0 for p in pivots):
        raise HermitiaError("not-positive-definite", "form is not positive definite")


def _round(x: Rational) -> int:
    """Nearest integer (halves round up)."""
    y = x + mpq(1, 2)
    return int(y.numerator // y.denominator)


def reduce_binary(f: QuadraticForm) -> ReductionResult:
    """Gauss reduction of a positive-definite binary form.

    The result satisfies ``|2b| ≤ a ≤ c``; on the boundary (``|2b| = a`` or
    ``a = c``) the middle coefficient is made non-positive.
    """
    if f.dim != 2:
        raise HermitiaError("dimension-mismatch", "binary reduction needs a form in 2 variables")
    _require_positive_definite(f)
    (a, b), (_, c) = f.gram
    # columns of U are the images of the new basis vectors
    u = [[1, 0], [0, 1]]
    steps = 0

    def apply(t):
        nonlocal u
        u = [[u[i][0] * t[0][0] + u[i][1] * t[1][0], u[i][0] * t[0][1] + u[i][1] * t[1][1]] for i in range(2)]

    while abs(2 * b) > min(a, c):
        if a >= c:
            # y -> y - k x shrinks a against c
            k = _round(b / c)
            a, b = a - 2 * k * b + k * k * c, b - k * c
            apply([[1, 0], [-k, 1]])
        else:
            # x -> x - k y shrinks c against a
            k = _round(b / a)
            b, c = b - k * a, c - 2 * k * b + k * k * a
            apply([[1, -k], [0, 1]])
        steps += 1
    if a > c:
        a, b, c = c, -b, a
        apply([[0, -1], [1, 0]])
        steps += 1
    if b > 0 and 2 * b == a:
        c = c - 2 * b + a
        b = b - a
        apply([[1, -1], [0, 1]])
        steps += 1
    elif b > 0 and a == c:
        b = -b
        apply([[0, -1], [1, 0]])
        steps += 1
    reduced = QuadraticForm([[a, b], [b, c]])
    U = (tuple(u[0]), tuple(u[1]))
    assert transform(f, U) == reduced
    return ReductionResult(reduced, U, steps)


def is_reduced_binary(f: QuadraticForm) -> bool:
    (a, b), (_, c) = f.gram
    return abs(2 * b) <= a <= c


def hermite_bound(num_vars: int, D) -> float:
    """Floating value of ``(4/3)^(n/2) · |D|^(1/(n+1))`` with ``num_vars = n + 1``."""
    D = Q(D)
    if D == 0:
        raise HermitiaError("zero-determinant", "the Hermite bound needs a nonzero determinant")
    n = num_vars - 1
    # exponentiate in log space so large determinants do not overflow
    return math.exp((n / 2) * math.log(4 / 3) + (math.log(abs(int(D.numerator))) - math.log(int(D.denominator))) / num_vars)


def hermite_bound_power(num_vars: int, D) -> Rational:
    """The exact quantity ``(4/3)^(n(n+1)/2) · |D|``, i.e. the bound raised to the power n+1."""
    n = num_vars - 1
    return FOUR_THIRDS ** (n * (n + 1) // 2) * abs(Q(D))


def within_hermite_bound(value, num_vars: int, D, strict: bool = False) -> bool:
    """Exact test of ``value ≤ bound`` (or ``<`` when ``strict``) without taking roots."""
    value = Q(value)
    if value < 0:
        return True
    lhs = value**num_vars
    rhs = hermite_bound_power(num_vars, D)
    return lhs < rhs if strict else lhs <= rhs


def hermite_bound_upper(num_vars: int, D) -> Rational:
    """A rational number guaranteed to be at least the Hermite bound."""
    target = hermite_bound_power(num_vars, D)
    r = Q(mpq(hermite_bound(num_vars, D))) * mpq(1 + 2**-30)
    while r**num_vars < target:
        r *= mpq(1 + 2**-20)
    return r


def lll_gram(gram: Sequence[Sequence], delta=mpq(3, 4)):
    """Exact LLL reduction of a positive-definite Gram matrix.

    Returns ``(reduced_gram, U)`` with ``reduced_gram = Uᵀ · gram · U`` and U
    unimodular (columns are the new basis in old coordinates).
    """
    n = len(gram)
    g = [[Q(x) for x in row] for row in gram]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 1:
        return g, U
    mu = [[mpq(0)] * n for _ in range(n)]
    B = [mpq(0)] * n
    B[0] = g[0][0]

    def gso(k):
        for j in range(k):
            s = g[k][j]
            for i in range(j):
                s -= mu[j][i] * mu[k][i] * B[i]
            mu[k][j] = s / B[j]
        s = g[k][k]
        for j in range(k):
            s -= mu[k][j] * mu[k][j] * B[j]
        B[k] = s

    def red(k, l):
        q = _round(mu[k][l]) if abs(mu[k][l]) > mpq(1, 2) else 0
        if not q:
            return
        gk, gl = g[k], g[l]
        for j in range(n):
            gk[j] -= q * gl[j]
        for row in g:
            row[k] -= q * row[l]
        for row in U:
            row[k] -= q * row[l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k, kmax):
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for row in U:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        Bp = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / Bp
        b = B[k]
        B[k] = B[k - 1] * b / Bp
        B[k - 1] = Bp
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gso(k)
        red(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return g, U


def _completed_squares(g):
    """``f(y) = Σ_i q_i (y_i + Σ_{j>i} m_ij y_j)²`` as (q, m), exact."""
    n = len(g)
    a = [list(r) for r in g]
    for i in range(n):
        for j in range(i + 1, n):
            a[j][i] = a[i][j]
            a[i][j] = a[i][j] / a[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= a[k][i] * a[i][l]
    q = [a[i][i] for i in range(n)]
    m = [[a[i][j] if j > i else mpq(0) for j in range(n)] for i in range(n)]
    return q, m


def _floor(x: Rational) -> int:
    return int(x.numerator // x.denominator)


def _integer_window(c: Rational, r: Rational) -> tuple[int, int]:
    """All integers y with ``(y − c)² ≤ r`` form the range ``[lo, hi]`` (empty when lo > hi)."""
    if r < 0:
        return 1, 0
    s = math.sqrt(float(r))
    hi = _floor(c + mpq(s))
    while (hi + 1 - c) ** 2 <= r:
        hi += 1
    while hi > c and (hi - c) ** 2 > r:
        hi -= 1
    lo = -_floor(mpq(s) - c)
    while (lo - 1 - c) ** 2 <= r:
        lo -= 1
    while lo < c and (lo - c) ** 2 > r:
        lo += 1
    if (hi - c) ** 2 > r or (lo - c) ** 2 > r:
        return 1, 0
    return lo, hi


def short_vectors(gram, radius) -> list[tuple[tuple[int, ...], Rational]]:
    """Every nonzero integer vector y with ``yᵀ gram y ≤ radius``, with its value."""
    q, m = _completed_squares([[Q(x) for x in r] for r in gram])
    n = len(q)
    radius = Q(radius)
    y = [0] * n
    out = []

    def descend(i, budget):
        c = mpq(0)
        for j in range(i + 1, n):
            if y[j]:
                c -= m[i][j] * y[j]
        lo, hi = _integer_window(c, budget / q[i])
        for t in range(lo, hi + 1):
            y[i] = t
            rest = budget - q[i] * (t - c) ** 2
            if i == 0:
                if any(y):
                    out.append((tuple(y), radius - rest))
            else:
                descend(i - 1, rest)
        y[i] = 0

    descend(n - 1, radius)
    return out


def lattice_minimum(f: QuadraticForm, dim_cap: int = DEFAULT_DIM_CAP) -> MinimumWitness:
    """Exact minimum of a positive-definite form over nonzero integer vectors.

    The witness is the lexicographically least minimizing vector.
    """
    if f.dim > dim_cap:
        raise HermitiaError("dimension-cap", f"dimension {f.dim} exceeds the cap {dim_cap}")
    _require_positive_definite(f)
    n = f.dim
    g, U = lll_gram(f.gram)
    radius = min(g[i][i] for i in range(n))
    radius = min(radius, hermite_bound_upper(n, f.determinant()))
    q, m = _completed_squares(g)
    y = [0] * n
    best = [radius]
    found: list[tuple[int, ...]] = []

    def descend(i, spent):
        c = mpq(0)
        for j in range(i + 1, n):
            if y[j]:
                c -= m[i][j] * y[j]
        lo, hi = _integer_window(c, (best[0] - spent) / q[i])
        for t in range(lo, hi + 1):
            y[i] = t
            total = spent + q[i] * (t - c) ** 2
            if total > best[0]:
                continue
            if i == 0:
                if not any(y):
                    continue
                if total < best[0]:
                    best[0] = total
                    found.clear()
                found.append(tuple(y))
            else:
                descend(i - 1, total)
        y[i] = 0

    descend(n - 1, mpq(0))
    assert found, "enumeration radius was an attained value"
    candidates = [tuple(sum(U[r][k] * v[k] for k in range(n)) for r in range(n)) for v in found]
    witness = min(candidates)
    value = f.evaluate(witness)
    assert value == best[0]
    return MinimumWitness(value, witness)
