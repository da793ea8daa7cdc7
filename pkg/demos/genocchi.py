"""Staircase t-polynomials and their Genocchi specializations."""
from plactic_forge import counting as C

for n in range(2, 7):
    g = C.genocchi_suite(n)
    print("n=%d  A(n+1;t) = %s" % (n, g["A(n+1;t)"]))
    print("     A(n+2;t) = %s  t=0: %d  t=1: %d  t=-1: %d"
          % (g["A(n+2;t)"], g["at_zero"], g["at_one"], g["at_minus_one"]))
