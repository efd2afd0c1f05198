"""Geometric plasticity: sliding vertices outward along the rays from the
minimizer leaves the minimizer fixed, because the unit vectors in the
equilibrium sum do not change along a ray.

The module provides the ray-stretch construction, the triangle-height and
dihedral-angle formulas, and the generalized 3-D cosine law predicting the
distance to a stretched vertex.  Formula evaluators take *measured* lengths
and angles so the formulas themselves are what gets tested, independent of
the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .equilibrium import classify
from .errors import DegenerateTriangle, FloatingViolated, OutOfDomain
from .geom_core import WeightedTetrahedron, as_point
from .numeric import SolverConfig, weiszfeld

__all__ = [
    "PlasticityInstance",
    "DihedralData",
    "height_012",
    "dihedral_alpha",
    "predict_a04p",
    "stretch",
    "verify_invariance",
    "measure_dihedral_data",
    "dihedral_angle",
    "vertex_angle",
]

CLAMP_SLACK = 1e-9


@dataclass(frozen=True)
class PlasticityInstance:
    """A floating base tetrahedron, its minimizer a0, and per-vertex ray
    stretch factors (A_i' = a0 + lambda_i * (A_i - a0))."""

    base: WeightedTetrahedron
    a0: np.ndarray
    lambdas: np.ndarray  # (4,)

    def __post_init__(self):
        object.__setattr__(self, "a0", as_point(self.a0))
        lam = np.asarray(self.lambdas, dtype=float)
        if lam.shape != (4,):
            raise ValueError("lambdas must have length 4")
        if not np.all(lam > 0):
            raise ValueError("stretch factors must be positive")
        object.__setattr__(self, "lambdas", lam)


@dataclass(frozen=True)
class DihedralData:
    """Measured lengths and angles feeding the dihedral/cosine-law formulas.

    alpha_123 and alpha_124p are the vertex angles at A2 (toward A1/A3 and
    A1/A4'); alpha_g4p is the dihedral between the planes A3A1A2 and
    A4'A1A2 along edge A1A2.
    """

    a02: float
    a03: float
    a23: float
    a12: float
    a24p: float
    alpha_123: float
    alpha_124p: float
    alpha_g4p: float


def height_012(a01: float, a02: float, a12: float) -> float:
    """Height of triangle A0A1A2 from A0 onto side A1A2."""
    if a12 <= 0:
        raise DegenerateTriangle("base side a12 must be positive")
    radicand = 4.0 * a01**2 * a02**2 - (a01**2 + a02**2 - a12**2) ** 2
    if radicand < 0:
        raise DegenerateTriangle("side lengths violate the triangle inequality")
    return math.sqrt(radicand / (4.0 * a12**2))


def _clamped_acos(arg: float) -> float:
    if abs(arg) > 1.0 + CLAMP_SLACK:
        raise OutOfDomain(f"arccos argument {arg} out of range beyond slack")
    return math.acos(min(1.0, max(-1.0, arg)))


def dihedral_alpha(d: DihedralData, h: float) -> float:
    """Dihedral angle between planes A0A1A2 and A3A1A2 along edge A1A2."""
    if h <= 0:
        raise OutOfDomain("height must be positive")
    sin123 = math.sin(d.alpha_123)
    if sin123 == 0.0:
        raise OutOfDomain("alpha_123 must not be 0 or pi")
    foot = d.a02**2 - h * h
    if foot < -CLAMP_SLACK * d.a02**2:
        raise OutOfDomain("a02 smaller than the height")
    arg = (
        (d.a02**2 + d.a23**2 - d.a03**2) / (2.0 * d.a23)
        - math.sqrt(max(0.0, foot)) * math.cos(d.alpha_123)
    ) / (h * sin123)
    return _clamped_acos(arg)


def predict_a04p(d: DihedralData, h: float, alpha: float) -> float:
    """Distance from A0 to the stretched vertex A4' by the generalized
    cosine law; collapses to the planar cosine law at h = 0."""
    foot = d.a02**2 - h * h
    if foot < -CLAMP_SLACK * d.a02**2:
        raise OutOfDomain("a02 smaller than the height")
    proj = math.sqrt(max(0.0, foot)) * math.cos(d.alpha_124p) + h * math.sin(
        d.alpha_124p
    ) * math.cos(d.alpha_g4p - alpha)
    radicand = d.a02**2 + d.a24p**2 - 2.0 * d.a24p * proj
    if radicand < 0:
        raise OutOfDomain("negative radicand; inconsistent inputs")
    return math.sqrt(radicand)


def vertex_angle(apex, p, q) -> float:
    """Angle at apex between the directions toward p and q."""
    u = as_point(p) - as_point(apex)
    v = as_point(q) - as_point(apex)
    cosang = np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v))
    return _clamped_acos(float(cosang))


def dihedral_angle(edge_p, edge_q, c1, c2) -> float:
    """Dihedral along edge pq between the half-planes containing c1 and c2."""
    p = as_point(edge_p)
    e = as_point(edge_q) - p
    e /= np.linalg.norm(e)
    v1 = as_point(c1) - p
    v1 = v1 - np.dot(v1, e) * e
    v2 = as_point(c2) - p
    v2 = v2 - np.dot(v2, e) * e
    cosang = np.dot(v1, v2) / (np.linalg.norm(v1) * np.linalg.norm(v2))
    return _clamped_acos(float(cosang))


def measure_dihedral_data(a0, a1, a2, a3, a4p) -> DihedralData:
    """Measure all lengths and angles the formulas need from an explicit
    configuration (normal-vector dihedral, direct distances)."""
    a0, a1, a2, a3, a4p = map(as_point, (a0, a1, a2, a3, a4p))
    return DihedralData(
        a02=float(np.linalg.norm(a0 - a2)),
        a03=float(np.linalg.norm(a0 - a3)),
        a23=float(np.linalg.norm(a2 - a3)),
        a12=float(np.linalg.norm(a1 - a2)),
        a24p=float(np.linalg.norm(a2 - a4p)),
        alpha_123=vertex_angle(a2, a1, a3),
        alpha_124p=vertex_angle(a2, a1, a4p),
        alpha_g4p=dihedral_angle(a1, a2, a3, a4p),
    )


def stretch(p: PlasticityInstance) -> WeightedTetrahedron:
    """Slide each vertex along its ray from a0 by its stretch factor.

    The stretched tetrahedron keeps the base weights and must remain in the
    floating case; otherwise FloatingViolated is raised.
    """
    new_vertices = p.a0 + p.lambdas[:, None] * (p.base.vertices - p.a0)
    stretched = WeightedTetrahedron(new_vertices, p.base.weights.copy())
    if not classify(stretched).floating:
        raise FloatingViolated("stretched tetrahedron left the floating case")
    return stretched


def verify_invariance(p: PlasticityInstance, cfg: SolverConfig | None = None) -> float:
    """Re-solve the stretched tetrahedron numerically and report how far its
    minimizer moved from a0 (should be ~0)."""
    stretched = stretch(p)
    sol = weiszfeld(stretched, cfg)
    return float(np.linalg.norm(sol.point - p.a0))
