"""Cauchy kernels prod (1 + p u_j) expanded in plactic-type quotients."""
from dataclasses import dataclass
from fractions import Fraction

from . import families as F
from . import perm as P
from . import plactic as W
from . import quotients as Q
from .poly import ONE, Poly, X, Y, pvar, var


class KernelError(ValueError):
    pass


MAX_FACTORS = 28


def wrap(a, n):
    """a if a >= 1, else n + a - 1."""
    return a if a >= 1 else n + a - 1


@dataclass(frozen=True)
class KernelSpec:
    kind: str = "C"       # C or F
    n: int = 4
    m: int = None         # F only: number of factor rows is m - 1
    p: object = "formal"  # formal | x | xy | callable (i, j) -> Poly

    def entry(self, i, j):
        p = self.p
        if callable(p):
            return Poly.coerce(p(i, j))
        if p == "formal":
            return pvar(i, j)
        if p == "x":
            return X(i)
        if p == "xy":
            return X(i) + Y(j)
        if isinstance(p, dict):
            return Poly.coerce(p[(i, j)])
        raise KernelError("unknown p specialization %r" % (p,))

    def indices(self):
        """(i, j, letter) in product order."""
        n = self.n
        if self.kind == "C":
            return [(i, j - i + 1, j) for i in range(1, n) for j in range(n - 1, i - 1, -1)]
        if self.kind == "F":
            if self.m is None:
                raise KernelError("F kernel needs m")
            return [(i, wrap(j - i + 1, n), j) for i in range(1, self.m) for j in range(n - 1, 0, -1)]
        raise KernelError("unknown kernel kind %r" % self.kind)

    def factors(self):
        idx = self.indices()
        if len(idx) > MAX_FACTORS:
            raise KernelError("%d factors exceed the bound %d" % (len(idx), MAX_FACTORS))
        return [(self.entry(i, k), j) for i, k, j in idx]

    def letters(self):
        return tuple(j for _, _, j in self.indices())


def _coef(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise KernelError("non-integral structure constant %s" % c)
        return Poly.const(c.numerator)
    return Poly.coerce(c)


def expand(spec, alg, factors=None):
    """Left-to-right product of the factors, normalized after every step.

    factors defaults to spec.factors(); each is (p, j) meaning (1 + p u_j) or
    (a, p, j) meaning (a + p u_j).
    """
    if factors is None:
        factors = spec.factors()
    elem = {(): ONE}
    for f in factors:
        a, p, j = (ONE,) + tuple(f) if len(f) == 2 else f
        new = {}
        for w, c in elem.items():
            if not a.is_zero():
                Q._add(new, w, c * a)
            cw, rep = alg.normalize(w + (j,))
            if rep is None:
                continue
            Q._add(new, rep, c * p * _coef(cw))
        elem = new
    return elem


def expand_free(spec):
    """Subword expansion in the free algebra: word -> coefficient."""
    return expand(spec, Q.Free("FREE", spec.n))


def dual_factors(n):
    """(1 + x_i)(1 + y_k) + (x_i + y_k) u_j in the order of the C kernel."""
    spec = KernelSpec("C", n)
    return [((1 + X(i)) * (1 + Y(k)), X(i) + Y(k), j) for i, k, j in spec.indices()]


# coefficient tables ---------------------------------------------------------

def table_algebra(family, n, m=None, q=None):
    if family == "K":
        return Q.Plactic(n, "PC")
    if family == "KQ":
        return Q.QPC(n, q)
    if family == "GK":
        return Q.algebra("IP", n, beta=1)
    if family == "U":
        return Q.Plactic(n, "PF", m)
    if family == "KN":
        return Q.Nilplactic(n)
    raise KernelError("unknown family %r" % family)


def coefficient_table(family, n, m=None, p="formal", q=None, gk_mode="refined"):
    """Tableau word -> coefficient in the matching quotient.

    K: plactic (PC_n), KQ: reduced q-plactic with formal q, GK: idplactic at
    beta = 1, U: F kernel in PF_{n,m}, KN: nilplactic.

    GK has two modes.  "direct" normalizes every kernel word in the
    idplactic algebra.  "refined" first collects the plactic coefficients
    K_T and then sends each tableau word to its idplactic representative,
    so each GK_T is a sum of K_T's.  They differ for n >= 4 (at 32 and 323),
    because u3 u3 u2 is plactic to 323 but idplactic to 32.
    """
    kind = "F" if family == "U" else "C"
    spec = KernelSpec(kind, n, m, p)
    if family == "GK" and gk_mode == "refined":
        return refine(expand(spec, table_algebra("K", n)), table_algebra("GK", n))
    if family == "GK" and gk_mode != "direct":
        raise KernelError("unknown GK mode %r" % gk_mode)
    return expand(spec, table_algebra(family, n, m, q))


def refine(elem, alg):
    """Push an element forward along word normalization in alg."""
    out = {}
    for w, c in elem.items():
        cw, rep = alg.normalize(w)
        if rep is not None:
            Q._add(out, rep, c * _coef(cw))
    return out


def plactic_polynomials(n):
    """Bottom code -> set of basis words of PC_n (the plactic polynomial)."""
    out = {}
    for w in Q.Plactic(n, "PC").basis():
        out.setdefault(W.bottom_code(w, n - 1), set()).add(w)
    return out


def _subword_embeddings(word, big):
    out = []

    def rec(i, start, acc):
        if i == len(word):
            out.append(tuple(acc))
            return
        for s in range(start, len(big)):
            if big[s] == word[i]:
                acc.append(s)
                rec(i + 1, s + 1, acc)
                acc.pop()
    rec(0, 0, [])
    return out


def complement_monomial(word, n):
    """Specialize u_i = 1 on the letters of word inside I_0 and u_i = x_{n-i}
    on the remaining letters.  None when word is not a subword of I_0."""
    big = W.staircase_word(n)
    embs = _subword_embeddings(tuple(word), big)
    if not embs:
        return None, 0
    s = set(embs[0])
    out = ONE
    for k, a in enumerate(big):
        if k not in s:
            out = out * X(n - a)
    return out, len(embs)


def key_pl_decomposition(n):
    """(alpha, K[alpha], PL word set, specialization record) for each bottom code.

    The PL word set is read off the PC_n kernel with p_ij = x_i.  The
    specialization sends the word set to a sum of complement monomials and is
    compared with the Schubert polynomials of w_alpha w0 and of w_alpha.
    """
    elem = coefficient_table("K", n, p="x")
    groups = {}
    for w, c in elem.items():
        groups.setdefault(W.bottom_code(w, n - 1), []).append((w, c))
    out = []
    w0 = P.longest(n)
    for alpha in sorted(groups):
        terms = groups[alpha]
        coefs = {c for _, c in terms}
        k_alpha = F.key(alpha)
        words = sorted(w for w, _ in terms)
        spec_sum, multi = Poly(), 0
        for w in words:
            mono, k = complement_monomial(w, n)
            multi = max(multi, k)
            if mono is not None:
                spec_sum = spec_sum + mono
        wa = P.code_to_perm(alpha, n)
        target = P.compose(wa, w0)
        out.append({
            "alpha": alpha,
            "key": k_alpha,
            "coefficient_is_key": coefs == {k_alpha},
            "words": words,
            "specialized": spec_sum,
            "matches_schubert_w_alpha_w0": spec_sum == F.schubert(target),
            "matches_schubert_w_alpha": spec_sum == F.schubert(wa),
            "max_embeddings": multi,
        })
    return out


# specialization checks -------------------------------------------------------

def _perm_coefficients(elem, n):
    return {P.from_word(w, n): c for w, c in elem.items()}


def schubert_check(n):
    """NC_n kernel with p_ij = x_i + y_j against double Schubert polynomials."""
    elem = _perm_coefficients(expand(KernelSpec("C", n, p="xy"), Q.Coxeter(n)), n)
    bad = [w for w in P.all_perms(n) if elem.get(w, Poly()) != F.schubert(w, double=True)]
    return {"n": n, "ok": not bad, "bad": bad}


def grothendieck_check(n, beta=1):
    """IC_n kernel at beta with p_ij = x_i + y_j + beta x_i y_j against the
    double beta-Grothendieck polynomials."""
    b = Poly.coerce(beta)
    spec = KernelSpec("C", n, p=lambda i, j: X(i) + Y(j) + b * X(i) * Y(j))
    elem = _perm_coefficients(expand(spec, Q.Coxeter(n, b)), n)
    bad = []
    for w in P.all_perms(n):
        target = F.grothendieck(w, b, double=True)
        if elem.get(w, Poly()) != target:
            bad.append(w)
    return {"n": n, "beta": beta, "ok": not bad, "bad": bad}


def dual_check(n):
    """Dual kernel in IC_n at beta = -1 against the H family at Y = 0."""
    elem = _perm_coefficients(expand(KernelSpec("C", n), Q.Coxeter(n, -1), dual_factors(n)), n)
    out = {}
    for w in P.all_perms(n):
        c = elem.get(w, Poly())
        out[w] = c.subs({"y%d" % j: 0 for j in range(1, n)})
    return out


def compatible_check(n, bound=None):
    """Compatible-sequence sums over all reduced (resp. idCoxeter) words."""
    bad = []
    for w in P.all_perms(n):
        s = Poly()
        for word in P.reduced_words(w):
            for b in W.compatible_b(word):
                m = ONE
                for ai, bi in zip(word, b):
                    m = m * (X(bi) + Y(ai - bi + 1))
                s = s + m
        if s != F.schubert(w, double=True):
            bad.append(w)
    return {"n": n, "ok": not bad, "bad": bad}


def specialization_checks(n):
    if n > 5:
        raise KernelError("specialization checks are bounded by n <= 5")
    return {
        "schubert": schubert_check(n),
        "grothendieck": grothendieck_check(n),
        "compatible": compatible_check(n),
    }


def bottom_code_lower_bound(n):
    """K_T minus prod over cells of p_{j, T(i,j) - j + 1} (column index first):
    nonnegative, zero iff the bottom code is a partition."""
    table = coefficient_table("K", n)
    rows = []
    for w, c in table.items():
        t = W.rsk_insert(w)
        m = ONE
        for row in t:
            for j, v in enumerate(row, 1):
                m = m * pvar(j, v - j + 1)
        diff = c - m
        alpha = W.bottom_code(w, n - 1)
        rows.append({"word": w, "nonnegative": diff.nonnegative(), "equal": diff.is_zero(),
                     "partition": P.is_partition(alpha), "bottom_code": alpha})
    return rows


def key_specialization_check(n, family="K"):
    """K_T(X) = key(bottom code) and GK_T(X) = KG(bottom code) with p_ij = x_i."""
    table = coefficient_table(family, n, p="x")
    rows = []
    for w, c in table.items():
        alpha = W.bottom_code(w, n - 1)
        if alpha is None:
            rows.append({"word": w, "ok": False, "alpha": None})
            continue
        if family == "K":
            target = F.key(alpha)
        else:
            target = F.key(alpha, "kg", beta=1)
        rows.append({"word": w, "ok": c == target, "alpha": alpha})
    return rows


def q_parameter(i, k):
    return var("q%d_%d" % (i, k))
