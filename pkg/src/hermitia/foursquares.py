"""Hermite's lattice-minimum construction of four-square decompositions.

For ``A`` not divisible by 4, pick ``α, β`` with ``α² + β² ≡ −1 (mod A)`` and
form ``f = (Ax + αz + βu)² + (Ay − βz + αu)² + z² + u²`` (determinant ``A⁴``).
Every integer value of ``f`` is a multiple of ``A`` and its minimum is below
``(4/3)^(3/2)·A ≈ 1.54·A``, so the minimum equals ``A`` and the minimizing
vector spells out four squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from gmpy2 import mpq

from .errors import HermitiaError
from .exact import G
from .forms import HermitianForm, QuadraticForm
from .reduction import lattice_minimum


@dataclass(frozen=True)
class FourSquares:
    a: int
    squares: tuple[int, int, int, int]
    alpha: int
    beta: int
    witness: tuple[int, int, int, int]


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sqrt_mod_prime(r: int, p: int) -> int | None:
    """One square root of r modulo an odd prime p (Tonelli–Shanks)."""
    r %= p
    if r == 0:
        return 0
    if pow(r, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(r, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, x = s, pow(z, q, p), pow(r, q, p), pow(r, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, x = i, b * b % p, t * b * b % p, x * b % p
    return x


def _sqrts_mod_prime_power(r: int, p: int, e: int) -> list[int]:
    """All x in [0, p^e) with x² ≡ r (mod p^e)."""
    pe = p**e
    r %= pe
    if pe <= 64:
        return [x for x in range(pe) if (x * x - r) % pe == 0]
    if p == 2:
        roots = [x for x in range(8) if (x * x - r) % 8 == 0]
        k = 3
    else:
        x0 = _sqrt_mod_prime(r, p)
        if x0 is None:
            return []
        roots = sorted({x0, (-x0) % p})
        k = 1
    while k < e:
        pk = p**k
        nxt = set()
        for x in roots:
            if p != 2 and x % p:
                # nonsingular: Hensel gives a unique lift
                t = (-((x * x - r) // pk) * pow(2 * x, -1, p)) % p
                nxt.add(x + t * pk)
            else:
                for t in range(p):
                    y = x + t * pk
                    if (y * y - r) % (pk * p) == 0:
                        nxt.add(y)
        roots = sorted(nxt)
        k += 1
        if not roots:
            return []
    return roots


def sqrts_mod(r: int, n: int) -> list[int]:
    """All square roots of r modulo n, sorted."""
    if n == 1:
        return [0]
    moduli, residues = [], []
    for p, e in factorize(n).items():
        roots = _sqrts_mod_prime_power(r, p, e)
        if not roots:
            return []
        moduli.append(p**e)
        residues.append(roots)
    out = []
    for combo in product(*residues):
        x, m = 0, 1
        for ri, mi in zip(combo, moduli):
            # CRT step: x ≡ ri (mod mi)
            t = ((ri - x) * pow(m, -1, mi)) % mi
            x, m = x + m * t, m * mi
        out.append(x % n)
    return sorted(out)


def find_alpha_beta(A: int) -> tuple[int, int]:
    """Lexicographically least ``0 ≤ α, β < A`` with ``α² + β² + 1 ≡ 0 (mod A)``."""
    A = int(A)
    if A < 1:
        raise HermitiaError("non-positive", "A must be a positive integer")
    if A % 4 == 0:
        raise HermitiaError("divisible-by-four", "strip powers of 4 from A first")
    for alpha in range(A):
        roots = sqrts_mod(-1 - alpha * alpha, A)
        if roots:
            return alpha, roots[0]
    raise AssertionError(f"no alpha, beta found for A={A}")


def _check_pair(A: int, alpha: int, beta: int) -> None:
    if A < 1 or (alpha * alpha + beta * beta + 1) % A:
        raise HermitiaError("invalid-alpha-beta", f"α²+β²+1 is not divisible by A={A}")


def hermite_quaternary(A: int, alpha: int, beta: int) -> QuadraticForm:
    """``(Ax + αz + βu)² + (Ay − βz + αu)² + z² + u²``."""
    _check_pair(A, alpha, beta)
    L = [[A, 0, alpha, beta], [0, A, -beta, alpha], [0, 0, 1, 0], [0, 0, 0, 1]]
    gram = [[sum(L[k][i] * L[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    return QuadraticForm(gram)


def hermite_reformulated(A: int, alpha: int, beta: int) -> QuadraticForm:
    """``(1/A)·f``, of determinant 1."""
    return hermite_quaternary(A, alpha, beta).scale(mpq(1, A))


def hermite_hermitian(A: int, alpha: int, beta: int) -> HermitianForm:
    """The binary Hermitian form whose realification is ``(1/A)·f``."""
    _check_pair(A, alpha, beta)
    return HermitianForm.binary(A, G(alpha, beta), mpq(alpha * alpha + beta * beta + 1, A))


def linear_parts(A: int, alpha: int, beta: int, v) -> tuple[int, int, int, int]:
    x, y, z, u = v
    return (A * x + alpha * z + beta * u, A * y - beta * z + alpha * u, z, u)


def four_squares(A: int) -> FourSquares:
    A = int(A)
    if A < 1:
        raise HermitiaError("non-positive", "A must be a positive integer")
    m, scale = A, 1
    while m % 4 == 0:
        m //= 4
        scale *= 2
    alpha, beta = find_alpha_beta(m)
    f = hermite_quaternary(m, alpha, beta)
    w = lattice_minimum(f)
    if w.value != m:
        raise AssertionError(f"minimum {w.value} of the quaternary form differs from {m}")
    parts = linear_parts(m, alpha, beta, w.vector)
    squares = tuple(sorted((abs(t) * scale for t in parts), reverse=True))
    assert sum(s * s for s in squares) == A
    return FourSquares(A, squares, alpha, beta, w.vector)
