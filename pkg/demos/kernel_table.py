"""Expand the Cauchy kernel in the plactic quotient PC_4 and list the
coefficient of every tableau word, grouped by shape."""
from plactic_forge import kernels as K
from plactic_forge import plactic as W

table = K.coefficient_table("K", 4)
by_shape = {}
for w, c in table.items():
    by_shape.setdefault(W.shape(W.rsk_insert(w)), []).append((w, c))
for lam in sorted(by_shape):
    print("shape", lam)
    for w, c in sorted(by_shape[lam]):
        print("  K_%s = %s" % ("".join(map(str, w)) or "e", c))
print(len(table), "tableau words")
