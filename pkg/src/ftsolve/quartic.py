"""Real-root extraction for real-coefficient quartics.

Ferrari's method: depress the quartic, solve the resolvent cubic by Cardano
in complex arithmetic, split into two quadratics, then polish each candidate
with a few Newton steps on the original polynomial.  Degenerate degrees
(vanishing leading coefficients) cascade down to cubic/quadratic/linear
closed forms.  Near-equal roots are merged, so the floating/absorbed
boundary's double root reports multiplicity 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ZeroPolynomial

__all__ = ["QuarticCoefficients", "RealRoots", "real_roots"]

MERGE_RTOL = 1e-7
IMAG_RTOL = 1e-7


@dataclass(frozen=True)
class QuarticCoefficients:
    """c4*y^4 + c3*y^3 + c2*y^2 + c1*y + c0."""

    c4: float
    c3: float
    c2: float
    c1: float
    c0: float

    def as_array(self) -> np.ndarray:
        arr = np.array([self.c4, self.c3, self.c2, self.c1, self.c0], dtype=float)
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        return arr


@dataclass(frozen=True)
class RealRoots:
    """Sorted real roots with multiplicities."""

    roots: tuple[float, ...]
    multiplicities: tuple[int, ...]

    def with_multiplicity(self) -> list[float]:
        out: list[float] = []
        for r, m in zip(self.roots, self.multiplicities):
            out.extend([r] * m)
        return out


def _quadratic(b: complex, c: complex) -> list[complex]:
    # x^2 + b x + c = 0, stable sign choice in the numerator
    disc = cmath.sqrt(b * b - 4.0 * c)
    if (b.conjugate() * disc).real >= 0.0:
        q = -0.5 * (b + disc)
    else:
        q = -0.5 * (b - disc)
    r1 = q
    r2 = c / q if q != 0 else 0.0 + 0.0j
    return [r1, r2]


def _cubic(b: complex, c: complex, d: complex) -> list[complex]:
    # x^3 + b x^2 + c x + d = 0 by Cardano, complex-safe
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    u3 = -q / 2.0 + disc
    if abs(u3) < 1e-300:
        u3 = -q / 2.0 - disc
    if abs(u3) < 1e-300:
        return [-shift] * 3
    if not cmath.isfinite(u3):
        return []
    u = u3 ** (1.0 / 3.0)
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    out = []
    for k in range(3):
        uk = u * omega**k
        out.append(uk - p / (3.0 * uk) - shift)
    return out


def _quartic_candidates(c: np.ndarray) -> list[complex]:
    # monic x^4 + b x^3 + cc x^2 + d x + e
    b, cc, d, e = (c[1:] / c[0]).tolist()
    # depress with x = t - b/4
    p = cc - 3.0 * b * b / 8.0
    q = d - b * cc / 2.0 + b**3 / 8.0
    r = e - b * d / 4.0 + b * b * cc / 16.0 - 3.0 * b**4 / 256.0
    shift = b / 4.0
    if abs(q) <= 1e-14 * (1.0 + abs(p) + math.sqrt(abs(r))):
        # biquadratic: t^2 solves a quadratic
        ts = []
        for z in _quadratic(complex(p), complex(r)):
            s = cmath.sqrt(z)
            ts.extend([s, -s])
        return [t - shift for t in ts]
    # resolvent cubic 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0
    ms = _cubic(complex(p), complex(p * p / 4.0 - r), complex(-q * q / 8.0))
    # pick the root giving the best-conditioned square root w = sqrt(2m):
    # the largest real positive one, falling back to largest magnitude
    m = max(ms, key=abs)
    real_pos = [
        z for z in ms if abs(z.imag) <= 1e-9 * (1.0 + abs(z)) and z.real > 0
    ]
    if real_pos:
        m = max(real_pos, key=lambda z: z.real)
    w = cmath.sqrt(2.0 * m)
    s1 = p / 2.0 + m + q / (2.0 * w)
    s2 = p / 2.0 + m - q / (2.0 * w)
    ts = _quadratic(-w, s1) + _quadratic(w, s2)
    return [t - shift for t in ts]


def _candidates(c: np.ndarray) -> list[complex]:
    degree = c.size - 1
    if degree == 1:
        return [complex(-c[1] / c[0])]
    if degree == 2:
        return _quadratic(complex(c[1] / c[0]), complex(c[2] / c[0]))
    if degree == 3:
        return _cubic(complex(c[1] / c[0]), complex(c[2] / c[0]), complex(c[3] / c[0]))
    return _quartic_candidates(c)


TINY_LEAD_RTOL = 1e-12


def _balanced_candidates(c: np.ndarray) -> list[complex]:
    """Closed-form candidates for well-scaled coefficients, balanced
    companion-matrix eigenvalues otherwise.

    The closed forms lose roots once the Cauchy root bound strays far from
    unit scale (cancellation in the depression shift, overflow in Cardano),
    so badly scaled polynomials take the eigenvalue route instead."""
    cn = c / np.max(np.abs(c))
    if abs(cn[0]) < TINY_LEAD_RTOL:
        return [complex(z) for z in np.roots(cn)]
    lam = max(
        (
            abs(ck / cn[0]) ** (1.0 / k)
            for k, ck in enumerate(cn[1:], start=1)
            if ck != 0
        ),
        default=1.0,
    )
    if not (1e-3 < lam < 1e3):
        return [complex(z) for z in np.roots(cn)]
    return _candidates(cn)


def _polish(root: complex, c: np.ndarray) -> complex:
    # a few Newton steps on the full polynomial
    dc = np.polyder(c)
    x = root
    # overflow far from the unit scale is handled by the finiteness guards
    # multiple roots only converge linearly, so allow plenty of iterations;
    # simple roots break out after two or three
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(60):
            fp = np.polyval(dc, x)
            if fp == 0 or not cmath.isfinite(fp):
                break
            step = np.polyval(c, x) / fp
            if not cmath.isfinite(step):
                break
            x = x - step
            if abs(step) <= 1e-15 * (1.0 + abs(x)):
                break
    return x


def real_roots(q: QuarticCoefficients) -> RealRoots:
    """All real roots of the quartic, sorted ascending, with multiplicities.

    Leading zero coefficients reduce the degree; an all-zero polynomial
    raises ZeroPolynomial.
    """
    full = q.as_array()
    c = np.trim_zeros(full, "f")
    if c.size == 0:
        raise ZeroPolynomial("all coefficients are zero")
    if c.size == 1:
        # nonzero constant: no roots
        return RealRoots(roots=(), multiplicities=())
    cands = [_polish(z, c) for z in _balanced_candidates(c)]
    cands = [z for z in cands if cmath.isfinite(z)]

    reals = [z.real for z in cands if abs(z.imag) <= IMAG_RTOL * (1.0 + abs(z))]
    reals.sort()
    merged: list[float] = []
    mult: list[int] = []
    for r in reals:
        scale = 1.0 + abs(r)
        if merged and abs(r - merged[-1]) <= MERGE_RTOL * scale:
            # re-center the cluster and bump multiplicity
            merged[-1] = (merged[-1] * mult[-1] + r) / (mult[-1] + 1)
            mult[-1] += 1
        else:
            merged.append(r)
            mult.append(1)
    for i, (r, m) in enumerate(zip(merged, mult)):
        if m >= 2:
            merged[i] = _refine_cluster(r, c, m)
    return RealRoots(roots=tuple(merged), multiplicities=tuple(mult))


def _refine_cluster(r: float, c: np.ndarray, m: int) -> float:
    # a root of multiplicity m is a simple root of the (m-1)th derivative,
    # where Newton recovers the digits the clustered candidates lost
    d = c
    for _ in range(m - 1):
        d = np.polyder(d)
    z = _polish(complex(r), d)
    near = abs(z.real - r) <= 10.0 * MERGE_RTOL * (1.0 + abs(r))
    if cmath.isfinite(z) and abs(z.imag) <= IMAG_RTOL * (1.0 + abs(z)) and near:
        return float(z.real)
    return r
