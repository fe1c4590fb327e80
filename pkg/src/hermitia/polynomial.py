"""Dense univariate polynomials over the Gaussian rationals.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from typing import Sequence

from .exact import ONE, ZERO, ComplexMatrix, G, GaussianRational, render_gaussian

Poly = tuple


def poly(coeffs: Sequence) -> Poly:
    c = [G(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else ZERO) - (q[i] if i < len(q) else ZERO) for i in range(n)])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly(out)


def scale(p: Poly, c) -> Poly:
    c = G(c)
    return poly([c * a for a in p])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, p[-1].inverse())


def divmod_poly(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    qlen = max(len(p) - len(d) + 1, 0)
    q = [ZERO] * qlen
    lead_inv = d[-1].inverse()
    for k in range(qlen - 1, -1, -1):
        c = r[k + len(d) - 1] * lead_inv
        q[k] = c
        if c:
            for j, b in enumerate(d):
                r[k + j] = r[k + j] - c * b
    return poly(q), poly(r[: len(d) - 1])


def derivative(p: Poly) -> Poly:
    return poly([a * k for k, a in enumerate(p)][1:])


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s·p + t·q = g and g monic (or zero)."""
    r0, r1 = p, q
    s0, s1 = (ONE,), ()
    t0, t1 = (), (ONE,)
    while r1:
        quo, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    inv = r0[-1].inverse()
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def gcd(p: Poly, q: Poly) -> Poly:
    return xgcd(p, q)[0]


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), made monic."""
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def evaluate(p: Poly, x) -> GaussianRational:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def evaluate_matrix(p: Poly, m: ComplexMatrix) -> ComplexMatrix:
    n = m.rows
    acc = ComplexMatrix.zeros(n, n)
    ident = ComplexMatrix.identity(n)
    for c in reversed(p):
        acc = acc @ m + ident.scale(c)
    return acc


def x_power_minus_one(p: int) -> Poly:
    """The polynomial λ^p − 1."""
    return poly([-ONE] + [ZERO] * (p - 1) + [ONE])


def charpoly(m: ComplexMatrix) -> Poly:
    """Characteristic polynomial det(λI − M), via Faddeev–LeVerrier."""
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    ident = ComplexMatrix.identity(n)
    mk = ComplexMatrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return poly(coeffs)


def render(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c == ONE:
            terms.append(mono)
        elif mono:
            terms.append(f"({render_gaussian(c)})*{mono}")
        else:
            terms.append(f"({render_gaussian(c)})")
    return " + ".join(terms)
