"""Projectivities and anti-projectivities of the complex line, and the
Hermitian metrics of complex hyperbolic space (Fubini's invariant and
Study's distance)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, HermitiaError
from .exact import ONE, ZERO, ZERO_Q, ComplexMatrix, G, GaussianRational, Q, Rational, as_matrix
from .forms import HermitianForm, definiteness


class ProjectivePoint:
    """Homogeneous coordinates up to a nonzero complex scalar."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        cs = tuple(G(c) for c in coords)
        if not cs or not any(cs):
            raise HermitiaError("zero-point", "homogeneous coordinates must not all vanish")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @classmethod
    def affine(cls, *zs) -> ProjectivePoint:
        """The point ``(z₁ : … : z_k : 1)``."""
        return cls([*zs, ONE])

    @classmethod
    def infinity(cls) -> ProjectivePoint:
        return cls([ONE, ZERO])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def normalized(self) -> tuple[GaussianRational, ...]:
        lead = next(c for c in self.coords if c)
        inv = lead.inverse()
        return tuple(c * inv for c in self.coords)

    def to_affine(self) -> tuple[GaussianRational, ...] | None:
        """Divide by the last coordinate; None at infinity."""
        last = self.coords[-1]
        if not last:
            return None
        inv = last.inverse()
        return tuple(c * inv for c in self.coords[:-1])

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if self.dim != other.dim:
            return False
        x, y = self.coords, other.coords
        return all(x[i] * y[j] == x[j] * y[i] for i in range(self.dim) for j in range(i + 1, self.dim))

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        return "ProjectivePoint(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class MoebiusMap:
    """``z ↦ (a z̃ + b)/(c z̃ + d)`` where ``z̃ = conj(z)`` if ``anti`` else ``z``."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational
    anti: bool = False

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, G(getattr(self, name)))
        if not self.a * self.d - self.b * self.c:
            raise HermitiaError("singular-map", "ad − bc must be nonzero")

    @classmethod
    def from_matrix(cls, m, anti: bool = False) -> MoebiusMap:
        m = as_matrix(m)
        if m.shape != (2, 2):
            raise DimensionError("a map of the projective line needs a 2×2 matrix")
        (a, b), (c, d) = m.entries
        return cls(a, b, c, d, anti)

    @property
    def matrix(self) -> ComplexMatrix:
        return ComplexMatrix([[self.a, self.b], [self.c, self.d]])

    def compose(self, other: MoebiusMap) -> MoebiusMap:
        """``self ∘ other`` (apply ``other`` first)."""
        inner = other.matrix.conj() if self.anti else other.matrix
        return MoebiusMap.from_matrix(self.matrix @ inner, self.anti != other.anti)

    def __call__(self, z):
        return apply_map(self, z)


def apply_map(m: MoebiusMap, z) -> ProjectivePoint:
    if not isinstance(z, ProjectivePoint):
        z = ProjectivePoint.affine(z)
    if z.dim != 2:
        raise DimensionError("maps of the projective line act on points with 2 coordinates")
    x, y = z.coords
    if m.anti:
        x, y = x.conj(), y.conj()
    return ProjectivePoint([m.a * x + m.b * y, m.c * x + m.d * y])


def _canonical_scale(p: Rational, q: GaussianRational, r: Rational) -> HermitianForm:
    lead = next(t for t in (p, q.re, q.im, r) if t)
    return HermitianForm.binary(p / lead, q * (1 / lead), r / lead)


def fixed_point_form(m: MoebiusMap) -> HermitianForm:
    """Binary Hermitian form ``F(x, y) = a x x̄ + b x ȳ + b̄ x̄ y + c y ȳ`` vanishing exactly on the fixed points.

    The fixed-point equation ``c x x̄ + d x ȳ − a x̄ y − b y ȳ = 0`` is complex;
    its real and imaginary parts are both Hermitian, and they must be real
    multiples of one another for the locus to be a single Hermitian zero set
    (always true for anti-involutions).
    """
    if not m.anti:
        raise HermitiaError("not-anti", "fixed-point forms are defined for anti-projectivities")
    a, b, c, d = m.a, m.b, m.c, m.d
    half = G(1) / 2
    real_part = (c.re, (d - a.conj()) * half, -b.re)
    imag_part = (c.im, (d + a.conj()) * half * G(0, -1), -b.im)

    def coords(t):
        p, q, r = t
        return (p, q.re, q.im, r)

    re_c, im_c = coords(real_part), coords(imag_part)
    re_zero, im_zero = not any(re_c), not any(im_c)
    if not re_zero and not im_zero:
        proportional = all(re_c[i] * im_c[j] == re_c[j] * im_c[i] for i in range(4) for j in range(i + 1, 4))
        if not proportional:
            raise HermitiaError(
                "not-hermitian-locus", "the fixed-point locus is not the zero set of a single Hermitian form"
            )
    return _canonical_scale(*(imag_part if re_zero else real_part))


def _inner(u: Sequence, w: Sequence) -> GaussianRational:
    acc = ZERO
    for x, y in zip(u, w):
        acc = acc + G(x) * G(y).conj()
    return acc


def fubini_R(u: Sequence, w: Sequence) -> Rational:
    """Fubini's invariant for two points inside the unit ball ``Σ|u_i|² < 1``.

    ``R = (⟨u,w⟩ − 1)(⟨w,u⟩ − 1) / ((⟨u,u⟩ − 1)(⟨w,w⟩ − 1)) − 1`` with
    ``⟨u,w⟩ = Σ u_i conj(w_i)``; all inner sums use one index.
    """
    u = [G(x) for x in u]
    w = [G(x) for x in w]
    if len(u) != len(w):
        raise DimensionError("points must have the same number of coordinates")
    nu, nw = _inner(u, u).re, _inner(w, w).re
    if nu >= 1 or nw >= 1:
        raise HermitiaError("not-interior", "points must lie strictly inside Σ|u_i|² < 1")
    uw = _inner(u, w)
    num = (uw - 1) * (uw.conj() - 1)
    value = num / ((nu - 1) * (nw - 1)) - 1
    assert value.im == 0, value
    return value.re


def affine_action(T, u: Sequence) -> tuple[GaussianRational, ...]:
    """Move the affine point ``u`` by ``T`` acting on ``(u, 1)``."""
    T = as_matrix(T)
    image = ProjectivePoint(T.apply([*u, ONE])).to_affine()
    if image is None:
        raise HermitiaError("at-infinity", "image point lies on the hyperplane at infinity")
    return image


def unit_ball_form(n_minus_1: int) -> HermitianForm:
    """``x₁x̄₁ + … + x_{n−1}x̄_{n−1} − x_n x̄_n``."""
    return HermitianForm.diagonal([1] * n_minus_1 + [-1])


@dataclass(frozen=True)
class StudyDistance:
    q: Rational
    distance: float


def _coords(x) -> tuple:
    return x.coords if isinstance(x, ProjectivePoint) else tuple(G(c) for c in x)


def study_q(x, y, H: HermitianForm) -> Rational:
    """``(x H ȳ)(y H x̄) / ((x H x̄)(y H ȳ))``, exactly."""
    x, y = _coords(x), _coords(y)
    sig = definiteness(H).signature
    if sig != (1, H.dim - 1):
        raise HermitiaError("wrong-signature", f"form has signature {sig}, expected (1, {H.dim - 1})")
    hx, hy = H.evaluate(x), H.evaluate(y)
    if hx <= 0 or hy <= 0:
        raise HermitiaError("not-interior", "points must satisfy (x x̄) > 0")
    xy = H.pairing(x, y)
    q = xy.norm() / (hx * hy)
    assert q >= 1, q
    return q


def study_distance(x, y, H: HermitianForm) -> StudyDistance:
    """``2·acosh(√q)`` with q from ``study_q``."""
    q = study_q(x, y, H)
    # acosh(√q) = log(√q + √(q − 1)); q − 1 is taken exactly first
    d = 2 * math.log(math.sqrt(float(q)) + math.sqrt(float(q - 1)))
    return StudyDistance(q, d)


@dataclass(frozen=True)
class InteriorReport:
    value: Rational
    sign: int
    normalized_value: Rational
    classification: str


def interior_predicate(f: HermitianForm, u, v) -> InteriorReport:
    """Where ``(u, v)`` sits relative to the real hypersurface ``f(u, v, 1) = 0``.

    ``f`` is normalized to signature (2, 1), like ``x x̄ + y ȳ − z z̄`` whose
    zero set is the sphere ``|u|² + |v|² = 1``; negative normalized values are
    inside it.
    """
    if f.dim != 3:
        raise DimensionError("interior predicate needs a ternary Hermitian form")
    sig = definiteness(f).signature
    if sig in ((3, 0), (0, 3)):
        raise HermitiaError("definite-form", "form is definite; its zero set is empty")
    if sig not in ((2, 1), (1, 2)):
        raise HermitiaError("degenerate-form", f"form with signature {sig} is degenerate")
    value = f.evaluate((G(u), G(v), ONE))
    sign = (value > 0) - (value < 0)
    normalized = value if sig == (2, 1) else -value
    if normalized < 0:
        cls = "interior"
    elif normalized == 0:
        cls = "boundary"
    else:
        cls = "exterior"
    return InteriorReport(value, sign, normalized, cls)
