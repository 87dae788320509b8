"""Closed-form bound functions: metric comparisons, bending length and volume brackets.

Everything here is an explicit formula of a few real parameters.  ``chi`` is
an Euler characteristic (only its absolute value enters), ``K`` an upper
bound for the sup norm of a Schwarzian and ``t`` an L2 norm.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "anderson_factor",
    "local_anderson_factor",
    "kra_maskit_bound",
    "kra_maskit_lower_bound",
    "l2_pointwise_bound",
    "thick_part_excess",
    "L2BendingTerms",
    "l2_bending_terms",
    "l2_bending_factor",
    "l2_volume_defect",
    "bending_bound_sup",
    "bending_bound_incompressible",
    "bending_bound_compressible",
    "bending_bound_short_curve",
    "bending_bound_l2",
    "retraction_lipschitz",
    "retraction_lipschitz_planar",
    "retraction_lipschitz_compressible",
    "area_from_bending",
    "bending_from_area",
    "volume_bound_chain",
    "renormalized_volume",
    "ASYMPTOTIC_EPSILON",
]

NEHARI = 1.5
# above this epsilon the thick/thin split behind the L2 bound is not meaningful
ASYMPTOTIC_EPSILON = 0.1


def _nonneg(name, v):
    if not v >= 0:
        raise DomainError(f"{name} must be nonnegative, got {v}")


def _positive(name, v):
    if not v > 0:
        raise DomainError(f"{name} must be positive, got {v}")


def anderson_factor(K: float) -> float:
    """sqrt(1 + 2K): Thurston over Poincare density when ||Sf|| <= K."""
    _nonneg("K", K)
    return math.sqrt(1.0 + 2.0 * K)


def local_anderson_factor(K: float, r: float) -> float:
    """Local version on a ball of radius r where ||Sf|| <= K."""
    _nonneg("K", K)
    _positive("r", r)
    return math.sqrt(1.0 + 2.0 * K) / math.tanh(r / 2.0)


def kra_maskit_bound(inj: float) -> float:
    """(3/2) coth^2(inj/2), the pointwise Schwarzian bound for a covering map."""
    _positive("injectivity radius", inj)
    return NEHARI / math.tanh(inj / 2.0) ** 2


def kra_maskit_lower_bound(delta: float) -> float:
    """(1/2) coth^2(delta/2), a lower bound for the sup norm given the shortest curve."""
    _positive("delta", delta)
    return 0.5 / math.tanh(delta / 2.0) ** 2


def l2_pointwise_bound(l2_norm: float, inj: float) -> float:
    """Pointwise norm bound ||phi(z)|| <= ||phi||_2 / (2 sqrt(pi/3) tanh^2(inj/2))."""
    _nonneg("L2 norm", l2_norm)
    _positive("injectivity radius", inj)
    return l2_norm / (2.0 * math.sqrt(math.pi / 3.0) * math.tanh(inj / 2.0) ** 2)


def thick_part_excess(eps: float) -> float:
    """Excess of the Thurston over the Poincare density on the eps-thick part.

    Valid when the L2 norm of the Schwarzian is at most eps^5; infinite for
    eps >= 1 where the comparison ball degenerates.
    """
    _nonneg("epsilon", eps)
    if eps == 0:
        return 0.0
    if eps >= 1:
        return math.inf
    pointwise = math.sqrt(3.0 / math.pi) * eps**5 / math.tanh(eps * eps / 2.0) ** 2
    return math.sqrt(1.0 + pointwise) * (1.0 + eps) / (1.0 - eps) - 1.0


class L2BendingTerms(NamedTuple):
    epsilon: float
    thick_excess: float
    thick_term: float
    thin_term: float
    value: float
    asymptotic: bool


def l2_bending_terms(t: float, K: float = NEHARI) -> L2BendingTerms:
    """Every intermediate of the L2 bending factor at L2 norm t.

    epsilon = t^(1/5); the thick part contributes 2F + F^2 and the at most
    3g - 3 thin collars, each of area at most 2 epsilon, contribute
    (3 epsilon / 2 pi)(1 + 2K).  ``asymptotic`` is False when epsilon exceeds
    :data:`ASYMPTOTIC_EPSILON`.
    """
    _nonneg("t", t)
    _nonneg("K", K)
    eps = t ** 0.2
    F = thick_part_excess(eps)
    thick = 2.0 * F + F * F
    thin = 3.0 * eps / (2.0 * math.pi) * (1.0 + 2.0 * K)
    return L2BendingTerms(eps, F, thick, thin, thick + thin, eps <= ASYMPTOTIC_EPSILON)


def l2_bending_factor(t: float, K: float = NEHARI) -> float:
    """Bending length over 2 pi |chi| in terms of the L2 norm t (behaves like t^(1/5))."""
    return l2_bending_terms(t, K).value


def l2_volume_defect(t: float) -> float:
    """pi times the bending factor at K = 3/2, the loss in the L2 volume bound."""
    return math.pi * l2_bending_factor(t, NEHARI)


def bending_bound_sup(chi: int, K: float) -> float:
    """4 pi |chi| K."""
    _nonneg("K", K)
    return 4.0 * math.pi * abs(chi) * K


def bending_bound_incompressible(chi: int) -> float:
    """6 pi |chi|, the sup bound at K = 3/2."""
    return 6.0 * math.pi * abs(chi)


def bending_bound_compressible(chi: int, delta: float) -> float:
    """6 pi |chi| coth^2(delta/4) with delta the shortest compressible curve."""
    _positive("delta", delta)
    return 6.0 * math.pi * abs(chi) / math.tanh(delta / 4.0) ** 2


def bending_bound_short_curve(chi: int, delta: float, A: float, B: float) -> float:
    """(A/delta + B)|chi|; A and B are universal constants supplied by the caller."""
    _positive("delta", delta)
    return (A / delta + B) * abs(chi)


def bending_bound_l2(chi: int, t: float, K: float = NEHARI) -> float:
    """2 pi |chi| times the L2 bending factor."""
    return 2.0 * math.pi * abs(chi) * l2_bending_factor(t, K)


def retraction_lipschitz(K: float) -> float:
    """Lipschitz constant sqrt(1 + 2K) of the retraction; 2 at the Nehari bound."""
    return anderson_factor(K)


def retraction_lipschitz_planar(delta: float) -> float:
    """sqrt(1 + 3 coth^2(delta/2)) for a planar domain with shortest curve delta."""
    _positive("delta", delta)
    return math.sqrt(1.0 + 3.0 / math.tanh(delta / 2.0) ** 2)


def retraction_lipschitz_compressible(delta: float) -> float:
    """sqrt(1 + 3 coth^2(delta/4)) with delta the shortest compressible curve."""
    _positive("delta", delta)
    return math.sqrt(1.0 + 3.0 / math.tanh(delta / 4.0) ** 2)


def area_from_bending(length: float, chi: int) -> float:
    """Area of the Thurston metric: bending length plus 2 pi |chi|."""
    _nonneg("bending length", length)
    return length + 2.0 * math.pi * abs(chi)


def bending_from_area(area: float, chi: int) -> float:
    length = area - 2.0 * math.pi * abs(chi)
    if length < 0:
        raise DomainError("area is below the hyperbolic area 2 pi |chi|")
    return length


def volume_bound_chain(convex_core_volume: float, length: float, chi: int, l2_norm: float):
    """(lower, upper, L2 lower) bracket for the renormalized volume.

    lower = V_C - L/2, upper = V_C - L/4 and the L2 lower bound is
    V_C - |chi| G(||phi||_2).
    """
    _nonneg("bending length", length)
    _nonneg("L2 norm", l2_norm)
    V = convex_core_volume
    return V - 0.5 * length, V - 0.25 * length, V - abs(chi) * l2_volume_defect(l2_norm)


def renormalized_volume(volume: float, l2_norm: float) -> float:
    """W-volume at the hyperbolic metric at infinity: vol(N) - ||phi||_2^2."""
    _nonneg("L2 norm", l2_norm)
    return volume - l2_norm**2
