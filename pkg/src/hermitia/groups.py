"""Finite matrix groups and the Hermitian forms they preserve.

A finite group of invertible matrices fixes the positive-definite Hermitian
form obtained by averaging the transforms of any definite seed over the group
(here the seed is the identity form). Elements that fix a definite form have
squarefree minimal polynomials and eigenvalues on the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import polynomial as P
from .errors import DimensionError, HermitiaError, SingularMatrixError
from .exact import ONE, ZERO, ComplexMatrix, G, as_matrix
from .forms import HermitianForm, definiteness, leading_minors, transform

DEFAULT_GROUP_CAP = 10_000


@dataclass(frozen=True)
class FiniteMatrixGroup:
    dim: int
    elements: tuple[ComplexMatrix, ...]
    generators: tuple[ComplexMatrix, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m) -> bool:
        return as_matrix(m) in set(self.elements)

    def verify(self) -> bool:
        """Check identity, closure under products, and inverses, all exactly."""
        members = set(self.elements)
        if ComplexMatrix.identity(self.dim) not in members:
            return False
        for a in self.elements:
            for b in self.elements:
                if a @ b not in members:
                    return False
        return all(a.inverse() in members for a in self.elements)


@dataclass(frozen=True)
class InvarianceCertificate:
    form: HermitianForm
    group: FiniteMatrixGroup
    checked: bool


def _validate_generators(generators: Sequence) -> list[ComplexMatrix]:
    gens = [as_matrix(g) for g in generators]
    if not gens:
        raise HermitiaError("no-generators", "at least one generator is required")
    n = gens[0].rows
    for g in gens:
        if not g.is_square() or g.rows != n:
            raise DimensionError("generators must be square matrices of one common size")
        if not g.det():
            raise SingularMatrixError("generator is singular")
    return gens


def group_closure(generators: Sequence, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Breadth-first closure of the generators under right multiplication."""
    gens = sorted(set(_validate_generators(generators)), key=ComplexMatrix.sort_key)
    n = gens[0].rows
    ident = ComplexMatrix.identity(n)
    elements = [ident]
    seen = {ident}
    head = 0
    while head < len(elements):
        e = elements[head]
        head += 1
        for g in gens:
            p = e @ g
            if p not in seen:
                if len(elements) >= cap:
                    raise HermitiaError("cap-exceeded", f"group has more than {cap} elements (or is infinite)")
                seen.add(p)
                elements.append(p)
    return FiniteMatrixGroup(n, tuple(elements), tuple(gens))


def element_order(m: ComplexMatrix, limit: int = DEFAULT_GROUP_CAP) -> int:
    ident = ComplexMatrix.identity(m.rows)
    p, k = m, 1
    while p != ident:
        p = p @ m
        k += 1
        if k > limit:
            raise HermitiaError("not-finite-order", f"no finite order up to {limit}")
    return k


def moore_average(group: FiniteMatrixGroup) -> InvarianceCertificate:
    """Average the identity form over the group: ``(1/|G|) Σ_g gᵀ conj(g)``."""
    n = group.dim
    total = ComplexMatrix.zeros(n, n)
    for g in group.elements:
        total = total + g.transpose() @ g.conj()
    form = HermitianForm(total.scale(G(1) / group.order))
    for g in group.elements:
        if transform(form, g) != form:
            raise HermitiaError("invalid-group", "averaged form is not invariant; the element list is not a group")
    if any(m <= 0 for m in leading_minors(form)):
        raise AssertionError("averaged form is not positive definite")
    return InvarianceCertificate(form, group, True)


@dataclass(frozen=True)
class ModulusReport:
    charpoly: P.Poly
    squarefree: P.Poly
    roots: tuple[complex, ...]
    max_deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tol


def _numeric_roots(p: P.Poly) -> list[complex]:
    if len(p) <= 1:
        return []
    coeffs = [complex(c) for c in reversed(p)]
    roots = np.roots(coeffs)
    # one Newton polish per root against the exact-coefficient polynomial
    polished = []
    deriv = [complex(c) for c in reversed(P.derivative(p))]
    for r in roots:
        fr = np.polyval(coeffs, r)
        dr = np.polyval(deriv, r)
        polished.append(complex(r - fr / dr) if dr != 0 else complex(r))
    return polished


def modulus_one_check(T, H: HermitianForm, tol: float = 1e-9) -> ModulusReport:
    """Check that a transformation fixing a definite Hermitian form has eigenvalues of modulus 1."""
    T = as_matrix(T)
    if T.shape != (H.dim, H.dim):
        raise DimensionError(f"matrix of shape {T.shape} for a form in {H.dim} variables")
    if definiteness(H).kind != "positive-definite":
        raise HermitiaError("not-positive-definite", "the Hermitian form must be positive definite")
    if transform(H, T) != H:
        raise HermitiaError("not-invariant", "the transformation does not fix the form")
    cp = P.charpoly(T)
    sq = P.squarefree_part(cp)
    roots = _numeric_roots(sq)
    dev = max((abs(abs(r) - 1.0) for r in roots), default=0.0)
    return ModulusReport(cp, sq, tuple(roots), dev, tol)


def minimal_polynomial(T) -> P.Poly:
    """Monic minimal polynomial, from the first linear dependency among I, T, T², …"""
    T = as_matrix(T)
    n = T.rows
    # echelon rows: (pivot column, vectorized power, coefficient combination)
    basis: list[tuple[int, list, list]] = []
    power = ComplexMatrix.identity(n)
    for k in range(n + 1):
        vec = [z for row in power.entries for z in row]
        combo = [ZERO] * k + [ONE]
        for piv, bvec, bcombo in basis:
            c = vec[piv]
            if c:
                vec = [x - c * y for x, y in zip(vec, bvec)]
                combo = [(combo[i] if i < len(combo) else ZERO) - c * (bcombo[i] if i < len(bcombo) else ZERO)
                         for i in range(max(len(combo), len(bcombo)))]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return P.monic(P.poly(combo))
        inv = vec[piv].inverse()
        vec = [x * inv for x in vec]
        combo = [x * inv for x in combo]
        new_basis = []
        for bpiv, bvec, bcombo in basis:
            c = bvec[piv]
            if c:
                bvec = [x - c * y for x, y in zip(bvec, vec)]
                bcombo = [(bcombo[i] if i < len(bcombo) else ZERO) - c * (combo[i] if i < len(combo) else ZERO)
                          for i in range(max(len(combo), len(bcombo)))]
            new_basis.append((bpiv, bvec, bcombo))
        basis = new_basis + [(piv, vec, combo)]
        power = power @ T
    raise AssertionError("Cayley–Hamilton violated")


@dataclass(frozen=True)
class FiniteOrderCertificate:
    order: int
    minimal_polynomial: P.Poly
    quotient: P.Poly  # minimal_polynomial · quotient = λ^p − 1
    bezout: tuple[P.Poly, P.Poly]  # s·m + t·m′ = 1

    @property
    def divides(self) -> bool:
        return P.mul(self.minimal_polynomial, self.quotient) == P.x_power_minus_one(self.order)

    @property
    def squarefree(self) -> bool:
        s, t = self.bezout
        m = self.minimal_polynomial
        return P.add(P.mul(s, m), P.mul(t, P.derivative(m))) == (ONE,)


def finite_order_normal_form(T, p: int) -> FiniteOrderCertificate:
    """Certify that ``T`` of order dividing ``p`` diagonalizes with p-th roots of unity."""
    T = as_matrix(T)
    if not T.is_square():
        raise DimensionError("matrix must be square")
    if p < 1 or T**p != ComplexMatrix.identity(T.rows):
        raise HermitiaError("not-finite-order", f"T^{p} is not the identity")
    m = minimal_polynomial(T)
    quo, rem = P.divmod_poly(P.x_power_minus_one(p), m)
    if rem:
        raise AssertionError("minimal polynomial does not divide λ^p − 1")
    g, s, t = P.xgcd(m, P.derivative(m))
    if g != (ONE,):
        raise AssertionError("minimal polynomial is not squarefree")
    cert = FiniteOrderCertificate(p, m, quo, (s, t))
    assert cert.divides and cert.squarefree
    return cert
