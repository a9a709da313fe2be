"""Fibonacci and Lucas numbers at any integer index.

Run:  python demos/01_fibonacci_lucas.py
"""
from fibarctan import AlgebraicFamily, check_algebraic_identity, fib, lucas

# The sequences extend to negative indices by reflection.
print("n     F(n)   L(n)")
for n in range(-6, 11):
    print(f"{n:3d} {fib(n):7d} {lucas(n):6d}")

# Isolated large indices are computed by fast doubling, not by filling the
# cache linearly.
print("\nF(10000) has", len(str(fib(10000))), "digits")

# The fourteen product/sum identities, each with its parity constraint.
print()
for family in AlgebraicFamily:
    ok = all(check_algebraic_identity(family, m, n)
             for m in range(30) for n in range(30) if family.parity.admits(m, n))
    print(f"{family.value}  {family.formula:36s} ({family.parity.value:6s})  holds: {ok}")
