"""
Hypersurfaces in toric surfaces
===============================

On ``P1 x P1`` the Cox ring has two Euler relations, one per Picard basis
element, so the augmented matrix at a quasi-homogeneous singular point has
rank two. The logarithmic defect enters the rank identity
``rk M' + Def = rk M``.
"""

from syzrank import ToricHypersurface, builtin_fan, classify_toric, parse_polynomial, validate_fan

pic = validate_fan(builtin_fan("P1xP1"))
print("Picard rank", pic.r, "degrees of the Cox variables", pic.degrees)

# %%
# A node: quasi-homogeneous, so the ranks agree.
ring = pic.cox_ring()
node = ToricHypersurface(pic, parse_polynomial("x1^2*y1^2 - x0^2*y0^2", ring))
r = classify_toric(node, (1, 0, 0, 1), oracle_charts=2, refine_isolated=True)
print(f"node: rk M' = {r.rk_Mprime}, Def = {r.defect}, rk M = {r.rk_M}, seh = {r.seh}")

# %%
# A T(5,5) point in the chart ``x0 = y0 = 1``: the rank drops and
# ``mu - tau = 1``.
t55 = ToricHypersurface(pic, parse_polynomial("x1^5*y0^5 + x0^5*y1^5 + x0^3*x1^2*y0^3*y1^2", ring))
r = classify_toric(t55, (1, 0, 1, 0), oracle_charts=2, refine_isolated=True)
print(
    f"T(5,5): rk M' = {r.rk_Mprime}, Def = {r.defect}, rk M = {r.rk_M}, seh = {r.seh}, "
    f"mu = {r.isolated.mu}, tau = {r.isolated.tau}"
)

# %%
# The projective plane as a toric variety gives back the projective answer.
p2 = validate_fan(builtin_fan("P2"))
cusp = ToricHypersurface(p2, parse_polynomial("x^3 - y^2*z", p2.cox_ring(("x", "y", "z"))))
r = classify_toric(cusp, (0, 0, 1))
print(f"cusp in P2: rk M' = {r.rk_Mprime}, Def = {r.defect}, rk M = {r.rk_M}, seh = {r.seh}")
