"""Vertex angles subtended at the axial minimizer.

Cosine-law formulas in terms of the edge length a and the axial coordinate
y.  By symmetry there are three distinct values: the angle under edge A1A2,
the angle under edge A3A4, and the common cross angle between the pairs.

The cross-angle numerator uses (c - y)^2 + (c + y)^2; a naive duplication of
the (c - y)^2 term fails the direct vector-angle check for y != 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveEdge

__all__ = ["AngleSet", "angles_at"]


@dataclass(frozen=True)
class AngleSet:
    """The three distinct vertex angles, in radians."""

    alpha_102: float  # angle under edge A1A2 (the b1 pair)
    alpha_304: float  # angle under edge A3A4 (the b4 pair)
    alpha_cross: float  # common value of the four cross angles


def angles_at(a: float, y: float) -> AngleSet:
    """Angles subtended by the edges at the axial point with coordinate y."""
    if not (a > 0):
        raise NonPositiveEdge(f"edge length must be positive, got {a}")
    c = a * math.sqrt(2.0) / 4.0
    a01_sq = (a / 2.0) ** 2 + (c - y) ** 2
    a04_sq = (a / 2.0) ** 2 + (c + y) ** 2
    alpha_102 = math.acos(max(-1.0, 1.0 - a * a / (2.0 * a01_sq)))
    alpha_304 = math.acos(max(-1.0, 1.0 - a * a / (2.0 * a04_sq)))
    cos_cross = ((c - y) ** 2 + (c + y) ** 2 - a * a / 2.0) / (
        2.0 * math.sqrt(a01_sq * a04_sq)
    )
    alpha_cross = math.acos(min(1.0, max(-1.0, cos_cross)))
    return AngleSet(alpha_102=alpha_102, alpha_304=alpha_304, alpha_cross=alpha_cross)
