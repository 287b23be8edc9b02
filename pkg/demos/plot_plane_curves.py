"""
Strong Euler homogeneity on plane curves
========================================

Three plane curves with one singular point each. The node and the cusp are
quasi-homogeneous at the origin, so the syzygy ranks agree there. The quintic
``x^5 + y^5 + x^2*y^2*z`` has a T(5,5) point, where the rank of the first
syzygy matrix drops to zero and the Milnor and Tjurina numbers differ.
"""

from syzrank import Point, classify, classify_isolated, find_rational_singular_points, parse_polynomial

curves = {
    "node": "y^2*z - x^3 - x^2*z",
    "cusp": "x^3 - y^2*z",
    "T(5,5) quintic": "x^5 + y^5 + x^2*y^2*z",
}

# %%
# Locate the rational singular points and classify each of them.
# ``classify_isolated`` also reports ``mu`` and ``tau``, and the two affine
# chart oracles confirm the ranks independently.
for name, text in curves.items():
    f = parse_polynomial(text, ("x", "y", "z"))
    search = find_rational_singular_points(f)
    for p in search.points:
        r = classify_isolated(f, p, oracle_charts=2)
        print(
            f"{name:15s} {p}: rk M' = {r.rk_Mprime}, rk M = {r.rk_M}, "
            f"mu = {r.isolated.mu}, tau = {r.isolated.tau}, seh = {r.seh}"
        )

# %%
# A smooth point always has full rank ``n = 2`` in the first syzygy matrix.
f = parse_polynomial(curves["node"], ("x", "y", "z"))
r = classify(f, Point((-1, 0, 1)))
print(f"smooth point {r.point}: status {r.status.value}, rk M' = {r.rk_Mprime}, seh = {r.seh}")
