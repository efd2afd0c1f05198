import math

import numpy as np
import pytest

from ftsolve import (
    EqualWeights,
    SymmetricInstance,
    complementary_axial,
    equilibrium_residual,
    ft_axial,
    minimize_reduced,
    quartic_coefficients,
    radical_intermediates,
    real_roots,
    solve_symmetric,
    stationarity_defect,
)

REF = SymmetricInstance(a=1.0, b1=2.5, b4=1.0)

# frozen from direct evaluation of the intermediate polynomial (independent
# arithmetic, cross-checked against the quartic roots)
S_REF = -5930.314849738308


def random_instances(n, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        a = rng.uniform(0.1, 10.0)
        b4 = rng.uniform(0.2, 5.0)
        ratio = max(rng.uniform(1.0, 20.0), 1.001)
        out.append(SymmetricInstance(a=a, b1=ratio * b4, b4=b4))
    return out


def test_quartic_coefficients_reference():
    q = quartic_coefficients(REF)
    assert q.c4 == pytest.approx(336.0, abs=1e-9)
    assert q.c3 == 0.0
    assert q.c2 == 0.0
    assert q.c1 == pytest.approx(-82.02438, abs=1e-5)
    assert q.c0 == pytest.approx(15.75, abs=1e-9)


def test_quartic_coefficients_equal_weights_degenerate():
    q = quartic_coefficients(SymmetricInstance(a=1.0, b1=1.0, b4=1.0))
    assert q.c4 == 0.0
    assert q.c0 == 0.0
    assert q.c1 == pytest.approx(-16.0 * math.sqrt(2.0), abs=1e-12)
    assert real_roots(q).roots == (0.0,)


def test_quartic_coefficients_scaling():
    q1 = quartic_coefficients(REF)
    q2 = quartic_coefficients(SymmetricInstance(a=2.0, b1=2.5, b4=1.0))
    assert q2.c1 == pytest.approx(8.0 * q1.c1, rel=1e-14)
    assert q2.c0 == pytest.approx(16.0 * q1.c0, rel=1e-14)
    assert q2.c4 == q1.c4


def test_radical_intermediates_reference():
    ri = radical_intermediates(REF)
    assert ri.s == pytest.approx(S_REF, rel=1e-12)
    assert ri.s < 0
    assert ri.imag_defect < 1e-9
    # principal cube root of a negative real sits in the upper half plane
    assert ri.s_cbrt.imag > 0
    assert abs(ri.s_cbrt**3 - ri.s) < 1e-9 * abs(ri.s)


def test_s_matches_direct_two_term_evaluation():
    # the implementation uses the telescoped factored form of s; confirm it
    # agrees with direct evaluation of the polynomial-plus-root expression
    # wherever the latter keeps enough digits
    for a, b1, b4 in [(1.0, 2.5, 1.0), (2.0, 5.0, 1.0), (0.5, 3.0, 2.0)]:
        p, q = b1 * b1, b4 * b4
        poly = a**6 * (
            -(p**6) + 2 * p**5 * q + p**4 * q**2 - 4 * p**3 * q**3
            + p**2 * q**4 + 2 * p * q**5 - q**6
        )
        inner = a**12 * (
            p**11 * q - 8 * p**10 * q**2 + 29 * p**9 * q**3 - 64 * p**8 * q**4
            + 98 * p**7 * q**5 - 112 * p**6 * q**6 + 98 * p**5 * q**7
            - 64 * p**4 * q**8 + 29 * p**3 * q**9 - 8 * p**2 * q**10 + p * q**11
        )
        assert inner > 0
        direct = poly + 2.0 * math.sqrt(2.0) * math.sqrt(inner)
        ri = radical_intermediates(SymmetricInstance(a=a, b1=b1, b4=b4))
        assert ri.s == pytest.approx(direct, rel=1e-7)


def test_radical_intermediates_weight_scaling():
    k = 3.7
    ri1 = radical_intermediates(REF)
    ri2 = radical_intermediates(SymmetricInstance(a=1.0, b1=k * 2.5, b4=k * 1.0))
    assert ri2.s == pytest.approx(k**12 * ri1.s, rel=1e-12)
    assert ft_axial(SymmetricInstance(a=1.0, b1=k * 2.5, b4=k * 1.0)) == pytest.approx(
        ft_axial(REF), rel=1e-12
    )


def test_radical_intermediates_equal_weights_raises():
    with pytest.raises(EqualWeights):
        radical_intermediates(SymmetricInstance(a=1.0, b1=1.0, b4=1.0))


def test_ft_axial_reference():
    assert ft_axial(REF) == pytest.approx(0.198358, abs=1e-5)


def test_ft_axial_equal_weights():
    assert ft_axial(SymmetricInstance(a=1.0, b1=1.5, b4=1.5)) == 0.0


def test_ft_axial_scales_with_edge():
    assert ft_axial(SymmetricInstance(a=2.0, b1=2.5, b4=1.0)) == pytest.approx(
        0.396716, abs=2e-5
    )
    # golden-section oracle at a=2
    assert ft_axial(SymmetricInstance(a=2.0, b1=2.5, b4=1.0)) == pytest.approx(
        minimize_reduced(SymmetricInstance(a=2.0, b1=2.5, b4=1.0)), abs=1e-7 * 2.0
    )


def test_ft_axial_mirror():
    mirrored = SymmetricInstance(a=1.0, b1=1.0, b4=2.5)
    assert ft_axial(mirrored) == pytest.approx(-ft_axial(REF), rel=1e-12)


def test_complementary_axial_reference():
    yp = complementary_axial(REF)
    assert yp == pytest.approx(0.539791, abs=1e-5)
    assert yp > math.sqrt(2.0) / 4.0


def test_complementary_signed_stationarity():
    yp = complementary_axial(REF)
    assert abs(stationarity_defect(REF, yp)) < 1e-9


def test_complementary_grows_as_weights_equalize():
    values = [
        complementary_axial(SymmetricInstance(a=1.0, b1=r, b4=1.0))
        for r in (1.5, 1.2, 1.1)
    ]
    assert values[0] < values[1] < values[2]


def test_solve_symmetric_reference():
    sol = solve_symmetric(REF)
    assert sol.case == "floating"
    assert sol.y == pytest.approx(0.198358, abs=1e-5)
    assert sol.objective == pytest.approx(4.10710, abs=1e-4)
    assert sol.residual < 1e-6


def test_solve_symmetric_equal_weights():
    sol = solve_symmetric(SymmetricInstance(a=1.0, b1=1.0, b4=1.0))
    assert sol.case == "floating"
    assert sol.y == 0.0
    assert np.allclose(sol.point, [0.0, 0.0, 0.0])


def test_solve_symmetric_mirrored_weights():
    # Weiszfeld oracle for the b4-dominant case
    from ftsolve import weiszfeld

    inst = SymmetricInstance(a=1.0, b1=1.0, b4=5.0)
    sol = solve_symmetric(inst)
    assert sol.case == "floating"
    assert sol.y < 0
    assert sol.y == pytest.approx(-ft_axial(SymmetricInstance(1.0, 5.0, 1.0)), rel=1e-12)
    num = weiszfeld(inst.tetrahedron())
    assert np.linalg.norm(num.point - sol.point) < 1e-6


def test_quartic_membership_random():
    for inst in random_instances(500, seed=5):
        q = quartic_coefficients(inst)
        for y in (ft_axial(inst), complementary_axial(inst)):
            res = 64.0 * y**4 * (inst.b1**2 - inst.b4**2) - 8.0 * math.sqrt(
                2.0
            ) * inst.a**3 * y * (inst.b1**2 + inst.b4**2) + 3.0 * inst.a**4 * (
                inst.b1**2 - inst.b4**2
            )
            bound = 1e-9 * (abs(q.c4) * y**4 + abs(q.c1) * abs(y) + abs(q.c0))
            assert abs(res) < bound


def test_root_set_matches_quartic_solver():
    for inst in random_instances(100, seed=6):
        y_int = ft_axial(inst)
        y_ext = complementary_axial(inst)
        roots = real_roots(quartic_coefficients(inst)).with_multiplicity()
        c = inst.c
        assert 0.0 < y_int < c
        assert y_ext > c
        for y in (y_int, y_ext):
            assert any(abs(y - r) < 1e-9 * max(1.0, inst.a) for r in roots)
        assert len(roots) == 2


def test_oracle_agreement_golden_section():
    for inst in random_instances(500, seed=7):
        assert abs(ft_axial(inst) - minimize_reduced(inst)) < 1e-7 * inst.a


def test_branch_cancellation_random():
    saw_negative_s = False
    for inst in random_instances(500, seed=8):
        ri = radical_intermediates(inst)
        assert ri.imag_defect < 1e-9 * inst.a
        if ri.s < 0:
            saw_negative_s = True
    assert saw_negative_s


def test_sign_flip_coincidence():
    # negating every weight flips each term of the equilibrium sum, so the
    # same point is critical; the quartic depends only on squared weights
    sol = solve_symmetric(REF)
    tet = REF.tetrahedron()
    total = np.zeros(3)
    for v, w in zip(tet.vertices, -tet.weights):
        diff = v - sol.point
        total += w * diff / np.linalg.norm(diff)
    assert np.linalg.norm(total) < 1e-6 * np.sum(tet.weights)
    assert np.linalg.norm(total) == pytest.approx(
        equilibrium_residual(tet, sol.point), rel=1e-9
    )
