"""
Checking every point at once
============================

The incidence test decides strong Euler homogeneity at every point of a
projective hypersurface without listing its singular points. Here it is
compared with the pointwise verdicts at the rational singular points, and
the discrepancy sum of ``mu - tau`` is printed alongside.
"""

from syzrank import classify, discrepancy_sum, find_rational_singular_points, global_seh_check, parse_polynomial

for text in ["y^2*z - x^3 - x^2*z", "x*y*z", "x^4 + y^4 - z^4", "x^5 + y^5 + x^2*y^2*z"]:
    f = parse_polynomial(text, ("x", "y", "z"))
    search = find_rational_singular_points(f)
    pointwise = all(classify(f, p).seh for p in search.points)
    print(
        f"{text:24s} global: {global_seh_check(f)!s:5s} pointwise: {pointwise!s:5s} "
        f"sum(mu - tau) = {discrepancy_sum(f, search.points)}"
    )
