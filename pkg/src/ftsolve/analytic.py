"""Closed-form solutions on the symmetry axis.

For a regular tetrahedron with weight pairs (b1, b1, b4, b4) the axial
coordinate y of the minimizer satisfies the quartic

    64 y^4 (b1^2 - b4^2) - 8 sqrt(2) a^3 y (b1^2 + b4^2)
        + 3 a^4 (b1^2 - b4^2) = 0.

The radical solution goes through intermediates s and t; s is negative for
valid inputs (casus irreducibilis), so the assembly must run in complex
arithmetic with principal branches and only cancels to a real value at the
very end.  A quartic-solver fallback guards against cancellation loss at
extreme weight ratios.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .equilibrium import classify, equilibrium_residual
from .errors import BranchCancellationFailure, EqualWeights
from .geom_core import (
    FtSolution,
    SymmetricInstance,
    axial_distances,
    axis_point,
    embed_regular,
    objective,
)
from .quartic import QuarticCoefficients, real_roots

__all__ = [
    "RadicalIntermediates",
    "quartic_coefficients",
    "radical_intermediates",
    "ft_axial",
    "complementary_axial",
    "solve_symmetric",
]

EQUAL_WEIGHTS_RTOL = 1e-12
IMAG_DEFECT_RTOL = 1e-9

SQRT2 = math.sqrt(2.0)


def quartic_coefficients(inst: SymmetricInstance) -> QuarticCoefficients:
    """Coefficients of the axial stationarity quartic.

    Degenerates to linear (c4 = c0 = 0, forced root y = 0) when b1 = b4.
    """
    a, b1, b4 = inst.a, inst.b1, inst.b4
    return QuarticCoefficients(
        c4=64.0 * (b1 * b1 - b4 * b4),
        c3=0.0,
        c2=0.0,
        c1=-8.0 * SQRT2 * a**3 * (b1 * b1 + b4 * b4),
        c0=3.0 * a**4 * (b1 * b1 - b4 * b4),
    )


def _check_unequal(inst: SymmetricInstance):
    if abs(inst.b1 - inst.b4) < EQUAL_WEIGHTS_RTOL * (inst.b1 + inst.b4):
        raise EqualWeights("b1 and b4 coincide; the quartic degenerates")


@dataclass(frozen=True)
class RadicalIntermediates:
    """The scalars s and t of the radical solution, with the imaginary
    residue surviving in the assembled roots (casus-irreducibilis
    bookkeeping)."""

    s: float
    s_cbrt: complex
    t: complex
    imag_defect: float


def _s_value(a: float, b1: float, b4: float) -> float:
    """The radical intermediate s.

    The printed form is a degree-12 polynomial plus 2*sqrt(2) times the
    square root of a degree-24 polynomial; both factor exactly,

        polynomial = -a^6 (p - q)^4 (p + q)^2,
        inner      =  a^12 p q (p - q)^8 (p^2 + q^2),

    with p = b1^2, q = b4^2, and the sum telescopes (difference of squares)
    to -a^6 (p - q)^8 / W with W = (p + q)^2 + 2*sqrt(2)*sqrt(p q (p^2 +
    q^2)) > 0.  The factored form is used because the printed one loses ~8
    digits to cancellation at moderate weight ratios; s < 0 always.
    """
    p2, q2 = b1 * b1, b4 * b4
    w = (p2 + q2) ** 2 + 2.0 * SQRT2 * math.sqrt(p2 * q2 * (p2 * p2 + q2 * q2))
    return -(a**6) * (p2 - q2) ** 8 / w


def _assemble(a: float, b1: float, b4: float) -> tuple[complex, complex, float, complex]:
    """Both axial roots (interior, exterior) from the radical formulas.

    Returns (y_interior, y_exterior, s, t).  All intermediate square and
    cube roots are principal complex branches.
    """
    s = _s_value(a, b1, b4)
    s_cbrt = complex(s) ** (1.0 / 3.0)
    denom = 4.0 * (b1**4 - 2.0 * b1**2 * b4**2 + b4**4)
    a4 = a**4
    u = a4 * b1**4 / (4.0 * s_cbrt) - a4 * b1**2 * b4**2 / (2.0 * s_cbrt) + a4 * b4**4 / (
        4.0 * s_cbrt
    )
    t = -u - s_cbrt / denom
    sqrt_t = cmath.sqrt(t)
    frac = (
        2.0
        * (-8.0 * SQRT2 * a**3 * b1**2 - 8.0 * SQRT2 * a**3 * b4**2)
        / (sqrt_t * (64.0 * b1**2 - 64.0 * b4**2))
    )
    base = u + s_cbrt / denom
    y_int = -sqrt_t / 2.0 + cmath.sqrt(base + frac) / 2.0
    y_ext = sqrt_t / 2.0 + cmath.sqrt(base - frac) / 2.0
    return y_int, y_ext, s, t


def radical_intermediates(inst: SymmetricInstance) -> RadicalIntermediates:
    """Evaluate s, t and the imaginary defect of the assembled roots."""
    _check_unequal(inst)
    y_int, y_ext, s, t = _assemble(inst.a, inst.b1, inst.b4)
    defect = max(abs(y_int.imag), abs(y_ext.imag))
    return RadicalIntermediates(
        s=s, s_cbrt=complex(s) ** (1.0 / 3.0), t=t, imag_defect=defect
    )


def _fallback_roots(inst: SymmetricInstance) -> tuple[float, float]:
    """Interior/exterior roots via the quartic solver plus the unsquared
    stationarity sign tests (squaring introduced extraneous roots)."""
    roots = real_roots(quartic_coefficients(inst)).with_multiplicity()
    c = inst.c
    interior = [y for y in roots if 0.0 < y < c]
    exterior = [y for y in roots if y > c]

    def _min_defect(ys, sign4):
        best, best_d = None, math.inf
        for y in ys:
            a01, a04 = axial_distances(inst.a, y)
            d = abs(inst.b1 * (y - c) / a01 + sign4 * inst.b4 * (y + c) / a04)
            if d < best_d:
                best, best_d = y, d
        return best

    y_int = _min_defect(interior, +1)
    y_ext = _min_defect(exterior, -1)
    if y_int is None or y_ext is None:
        raise BranchCancellationFailure("quartic fallback found no admissible root")
    return y_int, y_ext


def ft_axial(inst: SymmetricInstance) -> float:
    """Axial coordinate of the minimizer.

    Positive toward the heavier pair's edge; 0 for equal weights; the
    b1 < b4 case mirrors by swapping the pairs.
    """
    if abs(inst.b1 - inst.b4) < EQUAL_WEIGHTS_RTOL * (inst.b1 + inst.b4):
        return 0.0
    if inst.b1 < inst.b4:
        return -ft_axial(SymmetricInstance(inst.a, inst.b4, inst.b1))
    y_int, _, _, _ = _assemble(inst.a, inst.b1, inst.b4)
    if abs(y_int.imag) > IMAG_DEFECT_RTOL * inst.a:
        return _fallback_roots(inst)[0]
    return y_int.real


def complementary_axial(inst: SymmetricInstance) -> float:
    """Axial coordinate of the signed-weight critical point (one pair's sign
    flipped, |b1| > |b4|); lies strictly beyond c = a*sqrt(2)/4."""
    _check_unequal(inst)
    if inst.b1 < inst.b4:
        return -complementary_axial(SymmetricInstance(inst.a, inst.b4, inst.b1))
    _, y_ext, _, _ = _assemble(inst.a, inst.b1, inst.b4)
    if abs(y_ext.imag) > IMAG_DEFECT_RTOL * inst.a:
        return _fallback_roots(inst)[1]
    return y_ext.real


def solve_symmetric(inst: SymmetricInstance) -> FtSolution:
    """Full solve of the two-pairs instance: classification, location,
    objective and equilibrium defect."""
    emb = embed_regular(inst.a)
    tet = inst.tetrahedron()
    label = classify(tet)
    if not label.floating:
        vtx = tet.vertices[label.vertex]
        return FtSolution(
            case="absorbed",
            point=vtx,
            objective=objective(tet.vertices, tet.weights, vtx),
            residual=float("nan"),
            y=None,
            vertex=label.vertex,
        )
    y = ft_axial(inst)
    point = axis_point(emb, y)
    return FtSolution(
        case="floating",
        point=point,
        objective=objective(tet.vertices, tet.weights, point),
        residual=equilibrium_residual(tet, point),
        y=y,
    )
