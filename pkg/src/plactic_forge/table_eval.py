"""Evaluate transcribed table expressions against computed families."""
import re

from . import families as F
from . import perm as P
from .poly import parse, to_text

REF = re.compile(r"([A-Za-z]+)(\[(\d*)\]|@(\d+)|\{(\d*)\})")
N = 4


def _code(s):
    return tuple(int(c) for c in s.ljust(N, "0"))


def family_ref(name, code=None, perm=None):
    if perm is not None:
        w = P.perm(perm)
        code = P.lehmer_code(w)
    else:
        code = _code(code)
        w = P.code_to_perm(code, N)
    if name == "S":
        return F.schubert(w)
    if name == "Gm":
        return F.grothendieck(w, -parse("beta"))
    if name == "G":
        return F.grothendieck(w, 1)
    if name == "H":
        return F.dual_grothendieck(w, 1)
    variants = {"K": "key", "Kh": "reduced", "KG": "kg", "KGh": "reduced_kg"}
    if name in variants:
        return F.key(code, variants[name], beta=1)
    raise KeyError(name)


def evaluate(expr, resolve=None):
    """Parse expr after substituting family refs and, via resolve(name, word),
    kernel-coefficient refs."""
    def sub(m):
        name, code, perm, word = m.group(1), m.group(3), m.group(4), m.group(5)
        if word is not None:
            value = resolve(name, word)
        else:
            value = family_ref(name, code, perm)
        return "(" + to_text(value) + ")"
    return parse(REF.sub(sub, expr))


def chain_failures(chains, resolve=None):
    """Chains whose sides do not all agree; each item is (chain, values)."""
    bad = []
    for chain in chains:
        values = [evaluate(side, resolve) for side in chain if side]
        if any(v != values[0] for v in values[1:]):
            bad.append((chain, values))
    return bad
