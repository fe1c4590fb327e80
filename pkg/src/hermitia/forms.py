"""Quadratic and Hermitian forms as exact Gram matrices.

Conventions
-----------
* A ``QuadraticForm`` with Gram matrix S takes the value ``xᵀ S x``.
* A ``HermitianForm`` with Gram matrix H takes the value
  ``Σ h_ij x_i conj(x_j)``, the classical ``A v v₀ + B v w₀ + B₀ w v₀ + C w w₀``
  for ``H = [[A, B], [B₀, C]]``.
* ``transform(f, T)`` substitutes ``x = T y``. For a quadratic form the new Gram
  matrix is ``Tᵀ S T``; for a Hermitian form it is ``Tᵀ H conj(T)``.
* The determinant of a form is ``det(Gram)``; for ``ax² + 2bxy + cy²`` that is
  ``ac − b²``.
* Realification orders real coordinates interleaved, ``(x₁, y₁, x₂, y₂, …)``
  with ``v_k = x_k + i·y_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, HermitiaError, SingularMatrixError
from .exact import ZERO, ZERO_Q, ComplexMatrix, G, GaussianRational, Q, Rational, as_matrix


def _rational_grid(rows) -> tuple[tuple[Rational, ...], ...]:
    grid = tuple(tuple(Q(x) for x in r) for r in rows)
    n = len(grid)
    if n == 0 or any(len(r) != n for r in grid):
        raise DimensionError("Gram matrix must be square and non-empty")
    return grid


class QuadraticForm:
    """n-ary real quadratic form ``xᵀ S x`` with a symmetric rational Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram):
        if isinstance(gram, ComplexMatrix):
            if not gram.is_real():
                raise HermitiaError("not-real", "quadratic form needs a real Gram matrix")
            gram = [[z.re for z in r] for r in gram.entries]
        grid = _rational_grid(gram)
        n = len(grid)
        for i in range(n):
            for j in range(i):
                if grid[i][j] != grid[j][i]:
                    raise HermitiaError("not-symmetric", "Gram matrix is not symmetric")
        object.__setattr__(self, "gram", grid)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticForm is immutable")

    @classmethod
    def binary(cls, a, two_b, c) -> QuadraticForm:
        """The form ``a x² + (2b) x y + c y²`` (Gauss's integral convention)."""
        b = Q(two_b) / 2
        return cls([[a, b], [b, c]])

    @classmethod
    def sum_of_squares(cls, n: int) -> QuadraticForm:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> QuadraticForm:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.gram)

    def coefficients(self) -> tuple[Rational, Rational, Rational]:
        """``(a, 2b, c)`` for a binary form."""
        if self.dim != 2:
            raise DimensionError("coefficients() is only defined for binary forms")
        return self.gram[0][0], 2 * self.gram[0][1], self.gram[1][1]

    def __call__(self, *v):
        return self.evaluate(v[0] if len(v) == 1 and isinstance(v[0], (list, tuple)) else v)

    def evaluate(self, v: Sequence) -> Rational:
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} for a form in {self.dim} variables")
        x = [Q(t) for t in v]
        total = ZERO_Q
        for i, row in enumerate(self.gram):
            if x[i] == 0:
                continue
            s = ZERO_Q
            for j, g in enumerate(row):
                s += g * x[j]
            total += x[i] * s
        return total

    def determinant(self) -> Rational:
        return self.as_matrix().det().re

    def as_matrix(self) -> ComplexMatrix:
        return ComplexMatrix(self.gram)

    def scale(self, c) -> QuadraticForm:
        c = Q(c)
        return QuadraticForm([[c * g for g in r] for r in self.gram])

    def is_integral(self) -> bool:
        """All values at integer vectors are integers (diagonal and 2×off-diagonal integral)."""
        n = self.dim
        return all(
            (self.gram[i][i] if i == j else 2 * self.gram[i][j]).denominator == 1
            for i in range(n)
            for j in range(i, n)
        )

    def __eq__(self, other):
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(("Q", self.gram))

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(f"{g.numerator}/{g.denominator}" for g in r) + "]" for r in self.gram)
        return f"QuadraticForm([{rows}])"


class HermitianForm:
    """n-ary Hermitian form ``Σ h_ij x_i conj(x_j)`` with ``H`` equal to its conjugate transpose."""

    __slots__ = ("gram",)

    def __init__(self, gram):
        m = as_matrix(gram)
        if not m.is_square():
            raise DimensionError("Gram matrix must be square")
        if m != m.conj_transpose():
            raise HermitiaError("not-hermitian", "Gram matrix is not equal to its conjugate transpose")
        object.__setattr__(self, "gram", m)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianForm is immutable")

    @classmethod
    def binary(cls, a, b, c) -> HermitianForm:
        """``A v v₀ + B v w₀ + B₀ w v₀ + C w w₀``."""
        b = G(b)
        return cls([[G(a), b], [b.conj(), G(c)]])

    @classmethod
    def diagonal(cls, values: Sequence) -> HermitianForm:
        return cls(ComplexMatrix.diag(values))

    @classmethod
    def identity(cls, n: int) -> HermitianForm:
        return cls(ComplexMatrix.identity(n))

    @property
    def dim(self) -> int:
        return self.gram.rows

    def coefficients(self) -> tuple[Rational, GaussianRational, Rational]:
        """``(A, B, C)`` for a binary form."""
        if self.dim != 2:
            raise DimensionError("coefficients() is only defined for binary forms")
        g = self.gram.entries
        return g[0][0].re, g[0][1], g[1][1].re

    def pairing(self, x: Sequence, y: Sequence) -> GaussianRational:
        """Sesquilinear pairing ``Σ h_ij x_i conj(y_j)``; ``pairing(x, x)`` is the value."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionError(f"vectors of length {len(x)}, {len(y)} for a form in {n} variables")
        xs = [G(t) for t in x]
        ys = [G(t).conj() for t in y]
        total = ZERO
        for i, row in enumerate(self.gram.entries):
            if not xs[i]:
                continue
            s = ZERO
            for j, h in enumerate(row):
                s = s + h * ys[j]
            total = total + xs[i] * s
        return total

    def evaluate(self, v: Sequence) -> Rational:
        value = self.pairing(v, v)
        # exact by construction; a nonzero imaginary part would mean a broken invariant
        assert value.im == 0, value
        return value.re

    def __call__(self, *v):
        return self.evaluate(v[0] if len(v) == 1 and isinstance(v[0], (list, tuple)) else v)

    def determinant(self) -> Rational:
        d = self.gram.det()
        assert d.im == 0, d
        return d.re

    def scale(self, c) -> HermitianForm:
        return HermitianForm(self.gram.scale(Q(c)))

    def __eq__(self, other):
        if not isinstance(other, HermitianForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(("H", self.gram))

    def __repr__(self):
        return f"HermitianForm({self.gram!r})"


def evaluate(form, v: Sequence) -> Rational:
    return form.evaluate(v)


def transform(form, T, require_invertible: bool = False):
    """Substitute ``x = T y`` into ``form``."""
    T = as_matrix(T)
    n = form.dim
    if T.shape != (n, n):
        raise DimensionError(f"transformation of shape {T.shape} for a form in {n} variables")
    if require_invertible and not T.det():
        raise SingularMatrixError("transformation is not invertible")
    if isinstance(form, QuadraticForm):
        if not T.is_real():
            raise HermitiaError("not-real", "a quadratic form needs a real transformation")
        S = [[t.re for t in r] for r in T.entries]
        g = form.gram
        gs = [[sum((g[i][k] * S[k][j] for k in range(n)), ZERO_Q) for j in range(n)] for i in range(n)]
        out = [[sum((S[k][i] * gs[k][j] for k in range(n)), ZERO_Q) for j in range(n)] for i in range(n)]
        return QuadraticForm(out)
    if isinstance(form, HermitianForm):
        return HermitianForm(T.transpose() @ form.gram @ T.conj())
    raise TypeError(f"not a form: {type(form).__name__}")


@dataclass(frozen=True)
class Definiteness:
    kind: str
    signature: tuple[int, int]

    @property
    def rank(self) -> int:
        return self.signature[0] + self.signature[1]


def congruence_diagonal(gram) -> list[Rational]:
    """Real pivots of an exact congruence diagonalization of a Hermitian (or symmetric) matrix.

    Zero pivots are dropped, so the list length is the rank.
    """
    if isinstance(gram, (QuadraticForm, HermitianForm)):
        gram = gram.gram
    a = [list(r) for r in as_matrix(gram).entries]
    pivots: list[Rational] = []
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += c·row_j, col_i += conj(c)·col_j with c = conj(a_ji) makes a_ii = 2|a_ij|²
            c = a[j][i].conj()
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
            cc = c.conj()
            for r in a:
                r[i] = r[i] + cc * r[j]
            k = i
        d = a[k][k]
        pivots.append(d.re)
        inv = d.inverse()
        rest = [i for i in range(n) if i != k]
        a = [[a[i][j] - a[i][k] * inv * a[k][j] for j in rest] for i in rest]
    return pivots


def definiteness(form) -> Definiteness:
    pivots = congruence_diagonal(form)
    pos = sum(1 for p in pivots if p > 0)
    neg = sum(1 for p in pivots if p < 0)
    n = form.dim if isinstance(form, (QuadraticForm, HermitianForm)) else as_matrix(form).rows
    if pos + neg < n:
        kind = "degenerate"
    elif pos == n:
        kind = "positive-definite"
    elif neg == n:
        kind = "negative-definite"
    else:
        kind = "indefinite"
    return Definiteness(kind, (pos, neg))


def leading_minors(form) -> list[Rational]:
    m = form.gram if isinstance(form, HermitianForm) else form.as_matrix()
    out = []
    for k in range(1, m.rows + 1):
        sub = ComplexMatrix([r[:k] for r in m.entries[:k]])
        out.append(sub.det().re)
    return out


def hermitian_determinant(form: HermitianForm) -> Rational:
    return form.determinant()


def delta(form_or_a, b=None, c=None) -> Rational:
    """``Δ = B·B₀ − A·C`` for a binary Hermitian form (equal to ``−det``)."""
    if b is None:
        form = form_or_a
        if form.dim != 2:
            raise DimensionError("Δ is only defined for binary Hermitian forms")
        a, b, c = form.coefficients()
    else:
        a = form_or_a
    return G(b).norm() - Q(a) * Q(c)


def interleave(v: Sequence) -> tuple[Rational, ...]:
    """Complex vector → real coordinates ``(Re v₁, Im v₁, Re v₂, Im v₂, …)``."""
    out = []
    for z in v:
        z = G(z)
        out.extend((z.re, z.im))
    return tuple(out)


def deinterleave(x: Sequence) -> tuple[GaussianRational, ...]:
    if len(x) % 2:
        raise DimensionError("real vector length must be even")
    return tuple(G(x[k], x[k + 1]) for k in range(0, len(x), 2))


def realify_form(h: HermitianForm) -> QuadraticForm:
    n = h.dim
    S = [[ZERO_Q] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        for k in range(n):
            z = h.gram.entries[j][k]
            a, b = z.re, z.im
            S[2 * j][2 * k] = a
            S[2 * j][2 * k + 1] = b
            S[2 * j + 1][2 * k] = -b
            S[2 * j + 1][2 * k + 1] = a
    return QuadraticForm(S)


def realify_map(T) -> ComplexMatrix:
    """Complex n×n matrix → real 2n×2n matrix; each entry a+bi becomes [[a, −b], [b, a]]."""
    T = as_matrix(T)
    R = [[ZERO_Q] * (2 * T.cols) for _ in range(2 * T.rows)]
    for j in range(T.rows):
        for k in range(T.cols):
            z = T.entries[j][k]
            R[2 * j][2 * k] = z.re
            R[2 * j][2 * k + 1] = -z.im
            R[2 * j + 1][2 * k] = z.im
            R[2 * j + 1][2 * k + 1] = z.re
    return ComplexMatrix(R)
