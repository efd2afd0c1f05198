"""Solve one instance by three independent routes and compare.

The closed form, golden-section minimization of the reduced axial
objective, and full 3-D Weiszfeld iteration should all land on the same
point when the weights come in two equal pairs on a regular tetrahedron.
"""

import numpy as np

from ftsolve import (
    SymmetricInstance,
    axial_coordinate,
    embed_regular,
    ft_axial,
    minimize_reduced,
    solve_symmetric,
    weiszfeld,
)

inst = SymmetricInstance(a=1.0, b1=2.5, b4=1.0)

y_closed = ft_axial(inst)
y_golden = minimize_reduced(inst)

sol = weiszfeld(inst.tetrahedron())
y_weis = axial_coordinate(embed_regular(inst.a), sol.point)

print(f"instance: edge a={inst.a}, weights b1=b2={inst.b1}, b3=b4={inst.b4}")
print(f"closed form      y = {y_closed:.15f}")
print(f"golden section   y = {y_golden:.15f}")
print(f"weiszfeld        y = {y_weis:.15f}")
print(f"spread: {max(y_closed, y_golden, y_weis) - min(y_closed, y_golden, y_weis):.3e}")

full = solve_symmetric(inst)
print()
print(f"minimizer point   {np.array2string(full.point, precision=12)}")
print(f"objective value   {full.objective:.12f}")
print(f"force residual    {full.residual:.3e}")
