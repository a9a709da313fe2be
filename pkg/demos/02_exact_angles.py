"""Deciding arctangent identities exactly with Gaussian integers.

atan(p/q) is the argument of q + p*i, so a sum of arctangents has the
argument of a product.  The product fixes the angle up to a multiple of pi;
a certified evaluation pins that multiple down.

Run:  python demos/02_exact_angles.py
"""
from fibarctan import AngleSum, atan, equals, gaussian_product, reduce_angle

# pi/4 + atan(1/3) = atan(2)
lhs, rhs = AngleSum([atan(1), atan(1, 3)]), AngleSum([atan(2)])
print("atan(1) + atan(1/3) == atan(2):", equals(lhs, rhs))
print("  Gaussian product of lhs - rhs:", gaussian_product(lhs - rhs))

# A right angle: (1 + 2i)(7 + i)(3 + i) = 50i
print("atan(2) + atan(1/7) + atan(1/3) ->", reduce_angle(AngleSum([atan(2), atan(1, 7), atan(1, 3)])))

# The product alone cannot tell 0 from 2*pi; the pi-multiple can.
eight = AngleSum([atan(1, coeff=8)])
print("8 atan(1): product", gaussian_product(eight), " reduced", reduce_angle(eight))
print("8 atan(1) == 0 ?", equals(eight, AngleSum()))
