"""
From fuzzy to crisp: alpha-cut, type-reduction, defuzzification
===============================================================

Cutting a fuzzy scalar at level alpha slides every component toward the
crisp value.  The cut has two regimes around the lower-membership height h:

* alpha <= h   all six components survive ("below"),
* alpha >  h   the inner (LMF) components vanish ("between").

Type-reduction averages each side's surviving values; defuzzification
averages (left, c, right) into one crisp number.
"""

import numpy as np

from t2spline import (
    NT2FuzzyPoint,
    NT2FuzzyScalar,
    alpha_cut_scalar,
    defuzzify,
    pipeline_point,
    type_reduce,
)

s = NT2FuzzyScalar(4.0, 4.3, 4.6, 5.0, 5.4, 5.7, 6.0, h=0.6)

print("cutting the scalar at a ladder of alpha levels:")
print(" alpha  regime    left values                 right values")
for alpha in (0.0, 0.3, 0.6, 0.7, 0.9):
    cut = alpha_cut_scalar(s, alpha)
    fmt = lambda v: "  --  " if v is None else f"{v:6.3f}"
    print(
        f"{alpha:6.2f}  {cut.regime.value:<8} "
        f"({fmt(cut.left_outer)}, {fmt(cut.left_principal)}, {fmt(cut.left_inner)})   "
        f"({fmt(cut.right_inner)}, {fmt(cut.right_principal)}, {fmt(cut.right_outer)})"
    )

# Below h the type-reduced sides are three-term means, above h two-term
# means -- so the reduced value jumps at alpha == h.
print("\ntype-reduced interval and crisp output as alpha crosses h = 0.6:")
for alpha in (0.55, 0.6, 0.6000001, 0.8):
    tr = type_reduce(alpha_cut_scalar(s, alpha))
    print(
        f" alpha={alpha:<10.7g} [{tr.left:8.5f}, {tr.c:4.1f}, {tr.right:8.5f}]"
        f"  -> defuzzified {defuzzify(tr):8.5f}"
    )

# Mirror-symmetric spreads defuzzify straight back to the crisp value;
# asymmetric spreads do not -- that residual offset is what later separates
# the crisp solution curve from the crisp curve.
sym = NT2FuzzyScalar.from_spreads(5.0, (1.0, 0.7, 0.4, 0.4, 0.7, 1.0), h=0.6)
skew = NT2FuzzyScalar.from_spreads(5.0, (1.0, 0.7, 0.4, 0.1, 0.2, 0.3), h=0.6)
flat = NT2FuzzyScalar.from_spreads(3.0, (0.0,) * 6, h=0.6)

print("\nper-point pipeline at alpha = 0.8:")
for label, scalar in (("symmetric", sym), ("left-heavy", skew)):
    p = NT2FuzzyPoint(scalar, flat)
    x, y = pipeline_point(p, 0.8)
    print(f" {label:<10} crisp x = {scalar.c}, solution x = {x:.6f}  (offset {x - scalar.c:+.6f})")
