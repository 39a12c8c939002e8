"""
Defining normal type-2 fuzzy data points
========================================

A fuzzy scalar wraps a crisp value in seven ordered components:

    ll <= l <= rl <= c <= lr <= r <= rr

The outer triangle on [ll, rr] (apex height 1) is the upper membership
function; the inner triangle on [rl, lr] (apex height h < 1) is the lower
membership function.  The band between them is the footprint of
uncertainty.
"""

import numpy as np

from t2spline import NT2FuzzyPoint, NT2FuzzyScalar

# Spell out all seven components plus the lower-membership height h.
s = NT2FuzzyScalar(4.0, 4.3, 4.6, 5.0, 5.4, 5.7, 6.0, h=0.6)
print("components:", s.components())
print("height h:  ", s.h)

# Or start from the crisp value and six spreads
# (outer_left, principal_left, inner_left, inner_right, principal_right, outer_right).
same = NT2FuzzyScalar.from_spreads(5.0, (1.0, 0.7, 0.4, 0.4, 0.7, 1.0), h=0.6)
print("from_spreads reproduces it:", same == s)

# Sample both membership functions across the support.
print("\n   x     upper   lower")
for x in np.linspace(3.8, 6.2, 13):
    print(f"{x:6.2f}  {s.membership_upper(x):6.3f}  {s.membership_lower(x):6.3f}")

# The lower grade never exceeds the upper grade anywhere.
xs = np.linspace(3.0, 7.0, 401)
gap = [s.membership_upper(x) - s.membership_lower(x) for x in xs]
print("\nsmallest upper-lower gap over a dense grid:", min(gap))

# A planar fuzzy data point is just a pair of fuzzy scalars; the x and y
# uncertainties are independent.
p = NT2FuzzyPoint(
    NT2FuzzyScalar.from_spreads(2.0, (0.9, 0.6, 0.3, 0.2, 0.4, 0.6), h=0.5),
    NT2FuzzyScalar.from_spreads(4.0, (0.5, 0.3, 0.1, 0.1, 0.3, 0.5), h=0.8),
)
print("\ncrisp location of the fuzzy point:", p.crisp_xy)
print("x-spreads:", p.x.spreads)
print("y-spreads:", p.y.spreads)
