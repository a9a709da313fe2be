"""Verifying the finite identities of the catalog exactly.

Run:  python demos/03_catalog_identities.py
"""
from fibarctan import build_finite, list_identities, verify_finite
from fibarctan.catalog import Arity, Kind, perturb, verify_instance

inst = build_finite("T3-c", m=1, t=1)
print("T3-c at m=1, t=1")
print("  lhs:", inst.lhs)
print("  rhs:", inst.rhs)
print("  ", verify_finite("T3-c", 1, 1).status)

print("\nsmall sweep of every finite identity")
for info in list_identities():
    if info.kind is not Kind.FINITE:
        continue
    if info.arity is Arity.T:
        grid = [(None, t) for t in range(0, 21)]
    elif info.arity is Arity.M_N:
        grid = [(m, n) for m in range(0, 9) if info.admits_m(m) for n in range(1, 9)]
    else:
        grid = [(m, t) for m in range(0, 7) if info.admits_m(m) for t in range(0, 11)]
    ok = sum(verify_finite(info.id, m, s).verified for m, s in grid)
    print(f"  {info.id:8s} {ok:4d}/{len(grid)} verified")

# A wrong identity is caught: bump one numerator on the left of HR63-T5.
bad = perturb(build_finite("HR63-T5", t=3), "lhs", 1)
r = verify_instance(bad)
print("\nperturbed HR63-T5:", r.status, "witness", r.gaussian)
