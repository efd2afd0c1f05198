"""Property-based checks of the core invariants."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ftsolve import (
    QuarticCoefficients,
    SymmetricInstance,
    classify,
    embed_regular,
    ft_axial,
    minimize_reduced,
    objective,
    quartic_coefficients,
    real_roots,
    WeightedTetrahedron,
)

finite_weights = st.floats(min_value=0.05, max_value=50.0, allow_nan=False)
edge_lengths = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)
coeff = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@given(edge_lengths, finite_weights, finite_weights)
@settings(max_examples=200, deadline=None)
def test_ft_axial_inside_interval(a, b1, b4):
    inst = SymmetricInstance(a=a, b1=b1, b4=b4)
    y = ft_axial(inst)
    assert -inst.c < y < inst.c
    if b1 > b4:
        assert y >= 0
    elif b1 < b4:
        assert y <= 0


@given(edge_lengths, finite_weights, finite_weights)
@settings(max_examples=100, deadline=None)
def test_closed_form_matches_golden_section(a, b1, b4):
    inst = SymmetricInstance(a=a, b1=b1, b4=b4)
    assert abs(ft_axial(inst) - minimize_reduced(inst)) < 1e-6 * a


@given(coeff, coeff, coeff, coeff, coeff)
@settings(max_examples=300, deadline=None)
def test_quartic_roots_have_small_residual(c4, c3, c2, c1, c0):
    mags = [abs(v) for v in (c4, c3, c2, c1, c0) if v != 0]
    if not mags or max(mags) < 1e-6:
        return
    # the residual bound is only meaningful for coefficients within a
    # sane dynamic range; beyond that the bound itself overflows
    assume(max(mags) / min(mags) < 1e8)
    q = QuarticCoefficients(c4, c3, c2, c1, c0)
    rr = real_roots(q)
    poly = np.array([c4, c3, c2, c1, c0])
    for r in rr.with_multiplicity():
        scale = 1.0 + abs(r)
        bound = 1e-9 * max(abs(c) * scale**k for k, c in enumerate(poly[::-1]))
        assert abs(np.polyval(poly, r)) < bound


@given(finite_weights, finite_weights, finite_weights, finite_weights, edge_lengths)
@settings(max_examples=200, deadline=None)
def test_classification_scale_invariant(w1, w2, w3, w4, a):
    weights = np.array([w1, w2, w3, w4])
    base = classify(WeightedTetrahedron(embed_regular(1.0).vertices, weights))
    scaled = classify(WeightedTetrahedron(embed_regular(a).vertices, weights))
    assert base.floating == scaled.floating
    assert base.vertex == scaled.vertex


@given(
    st.lists(st.floats(min_value=-5, max_value=5), min_size=3, max_size=3),
    finite_weights,
)
@settings(max_examples=100, deadline=None)
def test_objective_triangle_inequality_shift(x, k):
    # scaling all weights scales the objective; translating everything
    # leaves it unchanged
    pts = embed_regular(1.0).vertices
    w = np.array([1.0, 2.0, 0.5, 1.5])
    x = np.asarray(x)
    base = objective(pts, w, x)
    assert objective(pts, k * w, x) == pytest.approx(k * base, rel=1e-12)
    shift = np.array([1.7, -2.2, 0.4])
    assert objective(pts + shift, w, x + shift) == pytest.approx(
        base, rel=1e-9, abs=1e-12
    )


@given(finite_weights, finite_weights)
@settings(max_examples=100, deadline=None)
def test_quartic_coefficients_odd_terms_vanish(b1, b4):
    q = quartic_coefficients(SymmetricInstance(a=1.0, b1=b1, b4=b4))
    assert q.c3 == 0.0
    assert q.c2 == 0.0
    assert q.c1 < 0.0
    assert math.copysign(1.0, q.c4) == math.copysign(1.0, q.c0) or q.c4 == q.c0 == 0.0
