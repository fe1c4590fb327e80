"""Exact rational and Gaussian-rational arithmetic.

Rationals are ``gmpy2.mpq`` values (always in lowest terms, positive
denominator). ``GaussianRational`` pairs two of them; ``ComplexMatrix`` is
an immutable dense matrix of ``GaussianRational`` entries.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import DimensionError, ParseError, SingularMatrixError

Rational = type(mpq(0))

ZERO_Q = mpq(0)
ONE_Q = mpq(1)


def Q(x) -> Rational:
    """Coerce ``x`` (int, mpq, Fraction or "p/q" string) to an exact rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"{x} is not real")
        return x.re
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return mpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(s: str) -> Rational:
    t = s.strip().replace(" ", "")
    if not _RATIONAL_RE.match(t):
        raise ParseError(f"malformed rational: {s!r}")
    if "/" in t:
        p, q = t.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator: {s!r}")
        return mpq(int(p), int(q))
    return mpq(int(t))


def render_rational(x) -> str:
    x = Q(x)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _make(cls, re: Rational, im: Rational) -> GaussianRational:
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    def conj(self) -> GaussianRational:
        return GaussianRational._make(self.re, -self.im)

    def norm(self) -> Rational:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return GaussianRational._make(self.re * other, self.im * other)
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({render_rational(self.re)!r}, {render_rational(self.im)!r})"

    def __str__(self):
        return render_gaussian(self)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational, Fraction)) and not isinstance(x, bool):
        return GaussianRational._make(Q(x), ZERO_Q)
    return NotImplemented


def G(x=0, im=None) -> GaussianRational:
    """Coerce to ``GaussianRational``; ``G(a, b)`` builds a + b·i."""
    if im is not None:
        return GaussianRational(x, im)
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_gaussian(x)
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact")
    return GaussianRational._make(Q(x), ZERO_Q)


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)

_NUM = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<isign>[+-])?(?P<im>{_NUM})?i)?$"
)


def parse_gaussian(s: str) -> GaussianRational:
    """Parse "p/q", "p/q+r/si", "3-2i", "i", "-1/2i" and similar."""
    t = s.strip().replace(" ", "")
    m = _GAUSS_RE.match(t)
    if not t or m is None:
        raise ParseError(f"malformed Gaussian rational: {s!r}")
    re_part, isign, im_part = m.group("re"), m.group("isign"), m.group("im")
    has_imag = t.endswith("i")
    if has_imag and re_part is not None and isign is None and im_part is None:
        # "3i" is matched as re="3" followed by "i"
        return GaussianRational(0, parse_rational(re_part))
    if has_imag and re_part is not None and isign is None:
        raise ParseError(f"malformed Gaussian rational: {s!r}")
    re_val = parse_rational(re_part) if re_part is not None else ZERO_Q
    if not has_imag:
        return GaussianRational(re_val, 0)
    im_val = parse_rational(im_part) if im_part is not None else ONE_Q
    if isign == "-":
        im_val = -im_val
    return GaussianRational(re_val, im_val)


def render_gaussian(z) -> str:
    z = G(z)
    im = z.im
    sign = "-" if im < 0 else "+"
    return f"{render_rational(z.re)}{sign}{render_rational(abs(im))}i"


class ComplexMatrix:
    """Immutable dense matrix over the Gaussian rationals."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(G(x) for x in row) for row in entries)
        if not grid:
            raise DimensionError("matrix needs at least one row")
        cols = len(grid[0])
        if cols == 0 or any(len(r) != cols for r in grid):
            raise DimensionError("ragged or empty matrix rows")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, grid: tuple) -> ComplexMatrix:
        m = object.__new__(cls)
        object.__setattr__(m, "rows", len(grid))
        object.__setattr__(m, "cols", len(grid[0]))
        object.__setattr__(m, "entries", grid)
        object.__setattr__(m, "_hash", None)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("ComplexMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> ComplexMatrix:
        return cls._make(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ComplexMatrix:
        return cls._make(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def diag(cls, values: Sequence) -> ComplexMatrix:
        n = len(values)
        vals = [G(v) for v in values]
        return cls._make(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def transpose(self) -> ComplexMatrix:
        return ComplexMatrix._make(tuple(zip(*self.entries)))

    def conj(self) -> ComplexMatrix:
        return ComplexMatrix._make(tuple(tuple(z.conj() for z in row) for row in self.entries))

    def conj_transpose(self) -> ComplexMatrix:
        return ComplexMatrix._make(tuple(tuple(z.conj() for z in col) for col in zip(*self.entries)))

    H = property(conj_transpose)

    def is_real(self) -> bool:
        return all(z.im == 0 for row in self.entries for z in row)

    def __add__(self, other: ComplexMatrix) -> ComplexMatrix:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return ComplexMatrix._make(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __sub__(self, other: ComplexMatrix) -> ComplexMatrix:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return ComplexMatrix._make(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __neg__(self) -> ComplexMatrix:
        return ComplexMatrix._make(tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> ComplexMatrix:
        c = G(c)
        return ComplexMatrix._make(tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: ComplexMatrix) -> ComplexMatrix:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            out_row = []
            for c in cols:
                re = ZERO_Q
                im = ZERO_Q
                for a, b in zip(r, c):
                    re += a.re * b.re - a.im * b.im
                    im += a.re * b.im + a.im * b.re
                out_row.append(GaussianRational._make(re, im))
            out.append(tuple(out_row))
        return ComplexMatrix._make(tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        vec = [G(x) for x in v]
        out = []
        for r in self.entries:
            acc = ZERO
            for a, b in zip(r, vec):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> ComplexMatrix:
        if not isinstance(k, int):
            return NotImplemented
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ComplexMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self) -> GaussianRational:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise DimensionError(f"determinant of a {self.shape} matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if not a[k][k]:
                for r in range(k + 1, n):
                    if a[r][k]:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            prev = pivot
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d

    def inverse(self) -> ComplexMatrix:
        if not self.is_square():
            raise DimensionError(f"inverse of a {self.shape} matrix")
        n = self.rows
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.entries)]
        for k in range(n):
            p = next((r for r in range(k, n) if a[r][k]), None)
            if p is None:
                raise SingularMatrixError()
            a[k], a[p] = a[p], a[k]
            inv = a[k][k].inverse()
            a[k] = [x * inv for x in a[k]]
            for r in range(n):
                if r != k and a[r][k]:
                    f = a[r][k]
                    a[r] = [x - f * y for x, y in zip(a[r], a[k])]
        return ComplexMatrix._make(tuple(tuple(r[n:]) for r in a))

    def rank(self) -> int:
        a = [list(r) for r in self.entries]
        rank = 0
        for c in range(self.cols):
            p = next((r for r in range(rank, self.rows) if a[r][c]), None)
            if p is None:
                continue
            a[rank], a[p] = a[p], a[rank]
            inv = a[rank][c].inverse()
            for r in range(rank + 1, self.rows):
                if a[r][c]:
                    f = a[r][c] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
            rank += 1
        return rank

    def trace(self) -> GaussianRational:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.entries))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple((z.re, z.im) for row in self.entries for z in row)

    def tolist(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self.entries]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(render_gaussian(z) for z in r) + "]" for r in self.entries)
        return f"ComplexMatrix([{body}])"


def as_matrix(m) -> ComplexMatrix:
    return m if isinstance(m, ComplexMatrix) else ComplexMatrix(m)
