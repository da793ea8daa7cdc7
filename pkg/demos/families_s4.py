"""Print Schubert, beta-Grothendieck and KN(1) polynomials for S4."""
from plactic_forge import families as F
from plactic_forge import perm as P

for w in sorted(P.all_perms(4), key=lambda w: (P.length(w), w)):
    name = P.word_str(w)
    kn1 = F.at_one(F.kn(w))
    total = kn1.subs({"alpha": 1, "beta": 1}).constant()
    print("%s  S = %s" % (name, F.schubert(w)))
    print("      G = %s" % F.grothendieck(w))
    print("      KN(1) = %s   [%s at alpha = beta = 1]" % (kn1, total))
