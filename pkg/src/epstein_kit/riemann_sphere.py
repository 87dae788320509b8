"""Points, Mobius maps and round disks on the Riemann sphere.

Finite points are plain Python complex numbers; the point at infinity is the
singleton :data:`INF`.  Round disks (including half-planes and disk
exteriors) are stored as normalized Hermitian forms

    Q(z) = A|z|^2 + 2 Re(conj(B) z) + C,      |B|^2 - A C = 1,

with the disk being the open set ``Q < 0``.  With this normalization the
curvature -1 hyperbolic density of the disk is simply ``2 / |Q(z)|``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, GeometryError

__all__ = [
    "INF",
    "ExtendedComplexPoint",
    "as_point",
    "is_inf",
    "MobiusMap",
    "RoundDisk",
    "mobius_apply",
    "disk_map",
    "round_disk_metric",
    "disk_to_unit",
]


class _Infinity:
    """The point at infinity of the Riemann sphere (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("epstein_kit.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtendedComplexPoint = Union[complex, _Infinity]

_EPS = np.finfo(float).eps


def is_inf(z) -> bool:
    return z is INF


def as_point(z) -> ExtendedComplexPoint:
    """Normalize ``z`` so that every point has exactly one representation."""
    if z is INF:
        return INF
    z = complex(z)
    if math.isnan(z.real) or math.isnan(z.imag):
        raise GeometryError("NaN is not a point of the Riemann sphere")
    if math.isinf(z.real) or math.isinf(z.imag):
        return INF
    return z


@dataclass(frozen=True)
class MobiusMap:
    """z -> (a z + b) / (c z + d), stored with a d - b c = 1.

    Coefficients are divided by the principal square root of the determinant,
    so a map and its negative represent the same transformation; use
    :meth:`isclose` for comparisons.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(v) for v in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        if abs(det) == 0.0 or not cmath.isfinite(det):
            raise GeometryError("degenerate Mobius map (ad - bc = 0)")
        s = cmath.sqrt(det)
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    # constructors -------------------------------------------------------
    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def translation(cls, b):
        return cls(1, b, 0, 1)

    @classmethod
    def scaling(cls, k):
        """z -> k z for nonzero complex k."""
        return cls(k, 0, 0, 1)

    @classmethod
    def inversion(cls):
        """z -> -1/z."""
        return cls(0, -1, 1, 0)

    @classmethod
    def cayley(cls):
        """Upper half-plane to unit disk, z -> (z - i)/(z + i)."""
        return cls(1, -1j, 1, 1j)

    @classmethod
    def disk_automorphism(cls, a, theta=0.0):
        """z -> e^{i theta} (z - a) / (1 - conj(a) z), requires |a| < 1."""
        if abs(a) >= 1:
            raise DomainError("disk automorphism needs |a| < 1")
        a = complex(a)
        u = cmath.exp(1j * theta)
        return cls(u, -u * a, -a.conjugate(), 1)

    @classmethod
    def from_three_points(cls, z1, z2, z3):
        """The map sending z1, z2, z3 to 0, 1, infinity."""
        z1, z2, z3 = (as_point(z) for z in (z1, z2, z3))
        if z1 is INF:
            return cls(0, z2 - z3, 1, -z3)
        if z2 is INF:
            return cls(1, -z1, 1, -z3)
        if z3 is INF:
            return cls(1, -z1, 0, z2 - z1)
        return cls(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))

    # algebra -------------------------------------------------------------
    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def isclose(self, other: "MobiusMap", tol: float = 1e-12) -> bool:
        m, n = self.matrix, other.matrix
        return bool(np.max(np.abs(m - n)) < tol or np.max(np.abs(m + n)) < tol)

    def __call__(self, z):
        return mobius_apply(self, z)

    def derivative(self, z: complex) -> complex:
        """m'(z) = 1 / (c z + d)^2 for finite z with c z + d != 0."""
        den = self.c * z + self.d
        if den == 0:
            raise DomainError("derivative undefined at the pole")
        return 1.0 / den**2

    def jet(self, z: complex):
        """(m, m', m'', m''') at a finite non-pole z."""
        den = self.c * z + self.d
        if den == 0:
            raise DomainError("jet undefined at the pole")
        c = self.c
        return (
            (self.a * z + self.b) / den,
            1.0 / den**2,
            -2.0 * c / den**3,
            6.0 * c * c / den**4,
        )


def mobius_apply(m: MobiusMap, z) -> ExtendedComplexPoint:
    """Apply ``m`` to a point of the Riemann sphere."""
    z = as_point(z)
    if z is INF:
        return INF if m.c == 0 else m.a / m.c
    den = m.c * z + m.d
    # treat rounding-level denominators as an exact pole
    if abs(den) <= 4.0 * _EPS * (abs(m.c * z) + abs(m.d)):
        return INF
    return as_point((m.a * z + m.b) / den)


@dataclass(frozen=True)
class RoundDisk:
    """Open round disk in the Riemann sphere, ``{z : Q(z) < 0}``.

    See the module docstring for the normalization of (A, B, C).
    """

    A: float
    B: complex
    C: float

    def __post_init__(self):
        A, B, C = float(self.A), complex(self.B), float(self.C)
        disc = abs(B) ** 2 - A * C
        if not disc > 0:
            raise GeometryError("Hermitian form does not describe a circle")
        s = math.sqrt(disc)
        object.__setattr__(self, "A", A / s)
        object.__setattr__(self, "B", B / s)
        object.__setattr__(self, "C", C / s)

    @classmethod
    def circle(cls, center, radius, inside=True):
        if not radius > 0:
            raise GeometryError("radius must be positive")
        center = complex(center)
        A, B, C = 1.0 / radius, -center / radius, (abs(center) ** 2 - radius**2) / radius
        if not inside:
            A, B, C = -A, -B, -C
        return cls(A, B, C)

    @classmethod
    def half_plane(cls, point, direction):
        """Open half-plane to the left of the oriented line ``point + s*direction``."""
        u = complex(direction)
        if u == 0:
            raise GeometryError("direction must be nonzero")
        u /= abs(u)
        p = complex(point)
        B = -1j * u
        C = 2.0 * (u.conjugate() * p).imag
        return cls(0.0, B, C)

    @classmethod
    def unit(cls):
        return cls.circle(0.0, 1.0)

    @classmethod
    def upper_half_plane(cls):
        return cls.half_plane(0.0, 1.0)

    @classmethod
    def from_hermitian(cls, H):
        H = np.asarray(H, dtype=complex)
        return cls(H[0, 0].real, H[0, 1], H[1, 1].real)

    # geometry ------------------------------------------------------------
    @property
    def hermitian(self) -> np.ndarray:
        return np.array([[self.A, self.B], [self.B.conjugate(), self.C]], dtype=complex)

    @property
    def is_half_plane(self) -> bool:
        # circles of radius beyond 1e10 are treated as lines
        return abs(self.A) < 1e-10

    @property
    def contains_infinity(self) -> bool:
        return self.A < 0 and not self.is_half_plane

    @property
    def center(self) -> complex:
        if self.is_half_plane:
            raise GeometryError("a half-plane has no center")
        return -self.B / self.A

    @property
    def radius(self) -> float:
        if self.is_half_plane:
            return math.inf
        return 1.0 / abs(self.A)

    @property
    def line(self):
        """(point, unit direction) of a half-plane's boundary, disk on the left."""
        if not self.is_half_plane:
            raise GeometryError("not a half-plane")
        u = 1j * self.B  # B = -i u
        p = -self.C * self.B / 2.0
        return p, u

    def form(self, z) -> float:
        """Q(z); for z = INF this is A (the form in the chart -1/z at 0)."""
        z = as_point(z)
        if z is INF:
            return self.A
        return self.A * abs(z) ** 2 + 2.0 * (self.B.conjugate() * z).real + self.C

    def contains(self, z) -> bool:
        return self.form(z) < 0

    def halfspace_value(self, xi: complex, t: float) -> float:
        """Extension of Q to the upper half-space; < 0 on the disk's side of its plane."""
        return self.A * (abs(xi) ** 2 + t * t) + 2.0 * (self.B.conjugate() * xi).real + self.C

    def complement(self) -> "RoundDisk":
        return RoundDisk(-self.A, -self.B, -self.C)

    def isclose(self, other: "RoundDisk", tol: float = 1e-9) -> bool:
        return (
            abs(self.A - other.A) < tol
            and abs(self.B - other.B) < tol
            and abs(self.C - other.C) < tol
        )

    def boundary_points(self, n: int) -> list:
        """n points on the boundary circle (for a half-plane, excluding INF)."""
        if self.is_half_plane:
            p, u = self.line
            s = np.tan(np.pi * (np.arange(n) + 0.5) / n - np.pi / 2)
            return [p + si * u for si in s]
        c, r = self.center, self.radius
        return [c + r * cmath.exp(2j * math.pi * k / n) for k in range(n)]


def disk_map(m: MobiusMap, d: RoundDisk) -> RoundDisk:
    """Image of a round disk under a Mobius map (interior goes to interior)."""
    minv = m.inverse().matrix
    H = minv.conj().T @ d.hermitian @ minv
    return RoundDisk.from_hermitian(H)


def round_disk_metric(d: RoundDisk, z) -> float:
    """Curvature -1 hyperbolic density of ``d`` at ``z``.

    At ``z = INF`` (only possible for a disk containing infinity) the density is
    taken with respect to the chart ``-1/z``.
    """
    q = d.form(z)
    if not q < 0:
        raise DomainError(f"{z!r} is not in the open disk")
    return -2.0 / q


def disk_to_unit(d: RoundDisk, z=None) -> MobiusMap:
    """A Mobius map taking ``d`` onto the unit disk, and ``z`` to 0 if given."""
    if d.is_half_plane:
        p, u = d.line
        # rotate the half-plane onto the upper half-plane, then Cayley
        m = MobiusMap.cayley() @ MobiusMap(1.0 / u, -p / u, 0, 1)
    elif d.contains_infinity:
        c, r = d.center, d.radius
        m = MobiusMap(0, r, 1, -c)
    else:
        c, r = d.center, d.radius
        m = MobiusMap(1.0 / r, -c / r, 0, 1)
    if z is not None:
        w = mobius_apply(m, z)
        if w is INF or abs(w) >= 1:
            raise DomainError("point is not in the disk")
        m = MobiusMap.disk_automorphism(w) @ m
    return m
