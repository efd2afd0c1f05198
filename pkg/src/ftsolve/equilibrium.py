"""Floating/absorbed classification of the weighted Fermat-Torricelli point
and the vector-equilibrium residual.

At a vertex A_i the pull of the other three weighted unit vectors either
exceeds the vertex's own weight (the minimizer floats free of the vertices)
or not (the minimizer is absorbed at that vertex).  Ties classify as
absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints
from .geom_core import WeightedTetrahedron, as_point

__all__ = ["CaseLabel", "classify", "equilibrium_residual"]


@dataclass(frozen=True)
class CaseLabel:
    """Classification outcome with the per-vertex margins
    ||sum_{j != i} B_j u(A_i, A_j)|| - B_i."""

    floating: bool
    vertex: int | None  # 0-based absorbed vertex, None if floating
    margins: np.ndarray  # (4,)

    @property
    def case(self) -> str:
        return "floating" if self.floating else "absorbed"


def classify(t: WeightedTetrahedron) -> CaseLabel:
    """Classify the minimizer as floating or absorbed at some vertex."""
    v = t.vertices
    w = t.weights
    margins = np.empty(4)
    for i in range(4):
        pull = np.zeros(3)
        for j in range(4):
            if j == i:
                continue
            diff = v[j] - v[i]
            pull += w[j] * diff / np.linalg.norm(diff)
        margins[i] = np.linalg.norm(pull) - w[i]
    absorbed = np.flatnonzero(margins <= 0.0)
    if absorbed.size == 0:
        return CaseLabel(floating=True, vertex=None, margins=margins)
    # uniqueness of the minimizer allows at most one non-positive margin
    return CaseLabel(floating=False, vertex=int(absorbed[0]), margins=margins)


def equilibrium_residual(t: WeightedTetrahedron, x) -> float:
    """Norm of the weighted unit-vector sum at x; zero exactly at a floating
    minimizer."""
    x = as_point(x)
    a = t.max_edge()
    total = np.zeros(3)
    for vi, wi in zip(t.vertices, t.weights):
        diff = vi - x
        norm = np.linalg.norm(diff)
        if norm <= 1e-12 * a:
            raise CoincidentPoints("x coincides with a vertex; residual undefined")
        total += wi * diff / norm
    return float(np.linalg.norm(total))
