"""The telescoping and doubling lemmas on random rational sequences.

Run:  python demos/05_telescoping.py
"""
import random
from fractions import Fraction

from fibarctan import double_shift, double_shift_alt, telescope_alt, telescope_diff

rnd = random.Random(0)
x = [Fraction(rnd.randint(-9, 9), rnd.randint(1, 9)) for _ in range(12)]
print("X =", [str(v) for v in x])
for op in (telescope_diff, telescope_alt, double_shift, double_shift_alt):
    for k, m in ((3, 2), (4, 5), (6, 1)):
        lhs, rhs = op(x, k, m)
        print(f"{op.__name__:17s} ({k}, {m}):  {str(lhs):>12s} = {str(rhs):<12s} {lhs == rhs}")
