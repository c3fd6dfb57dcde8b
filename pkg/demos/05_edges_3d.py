"""Vertex and edge terms of the order-1/2 Renyi entropy of a cube.

In three dimensions a cube's entropy has, besides the area term and the
log term from its eight vertices, a term linear in the edge length l.
Leaving that column out of the fit makes the log coefficient unstable;
with it the spread over fit windows collapses.
"""
from harmonic_entanglement import (
    BoundaryCondition,
    LatticeSpec,
    coefficient_statistics,
    extract_corners_edges_3d,
    run_sweep,
    select_power_order,
)

spec = LatticeSpec(3, (30, 30, 30), BoundaryCondition.PBC)
series = run_sweep(spec, "cube", (14.5, 14.5, 14.5), range(3, 11), "Renyi(0.5)")
for p in series.points:
    print(f"l={p.l:2d}  P_B={p.P_B:6.0f}  S_1/2={p.value:.6f}")

order, with_edge = select_power_order(series, min_dof=1)
without = coefficient_statistics(series, order, include_edge=False, min_dof=1)
print(f"\norder {order}: log coefficient std {with_edge.std:.2e} with the edge term, {without.std:.2e} without")

corners, edges = extract_corners_edges_3d(with_edge)
print(f"beta(pi/2) = {corners[0].value:.5f} +/- {corners[0].std:.5f}")
print(f"e(pi/2)    = {edges[0].value:.5f} +/- {edges[0].std:.5f}")
