"""Certified evaluation of the infinite series.

Each series is enclosed as a partial-sum ball plus a rigorous tail bound and
compared with its closed form (rational arctangents, atan(1/phi) or pi/4).

Run:  python demos/04_infinite_series.py
"""
from fibarctan import golden_arctan, tail_bound, verify_infinite
from fibarctan.ball import atan_rational
from fibarctan.catalog import identity_info

for ident in ("I-E7", "I-E6", "I-E4"):
    r = verify_infinite(ident, digits=50)
    print(f"{ident}: {r.status} with {r.terms_used} terms")
    print(f"   series      {r.lhs.to_decimal(50)}")
    print(f"   closed form {r.rhs.to_decimal(50)}")

print("\ntail after N terms of sum atan(1/F(2n+1)):")
for N in (5, 10, 20, 40):
    print(f"   N={N:2d}  bound {float(tail_bound('I-E7', None, N).bound):.3e}")

print("\ncorollaries at m = 1..6, 40 digits")
for ident in ("C1-a", "C1-b", "C2-a", "C3-a", "C3-b", "C3-c"):
    info = identity_info(ident)
    statuses = [verify_infinite(ident, m, 40).status for m in range(1, 7) if info.admits_m(m)]
    print(f"   {ident}: {statuses}")

# 2 atan(1/phi) = atan(2), since phi^2 = phi + 1
print("\n2 atan(1/phi) contains atan(2):", (2 * golden_arctan(200)).contains(atan_rational(2, 240)))
