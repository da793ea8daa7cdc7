"""Schubert, Grothendieck, key, DZ and KN polynomial families."""
from functools import lru_cache

from . import perm as P
from .divdiff import (NEWTON, OperatorSpec, apply_T, apply_word_raw,
                      bott_samelson_spec, coxeter_valid)
from .poly import ONE, Poly, X, Y, divided_difference, expand_in_family, staircase_product, x_power


class FamilyError(ValueError):
    pass


def _beta(beta):
    return Poly.coerce(beta)


def _seed(n, double):
    return staircase_product(n, double=double)


def _ascent(w, path):
    asc = [i for i in range(1, len(w)) if w[i - 1] < w[i]]
    return asc[0] if path == "min" else asc[-1]


def schubert(w, double=False):
    w = tuple(w)
    n = len(w)
    word = P.reduced_word(P.compose(P.inverse(w), P.longest(n)))
    return apply_word_raw(NEWTON, word, _seed(n, double))


@lru_cache(maxsize=None)
def _groth(w, beta, variant, double, path):
    n = len(w)
    if w == P.longest(n):
        return _groth_seed(n, beta, double)
    i = _ascent(w, path)
    v = P.times_s(w, i)  # v_i > v_{i+1}, w = v s_i
    g = _groth(v, beta, variant, double, path)
    if variant == "standard":
        return divided_difference((1 + beta * X(i + 1)) * g, i)
    if variant == "dual":
        return (1 + beta * X(i)) * divided_difference(g, i)
    raise FamilyError("unknown variant %r" % variant)


def _groth_seed(n, beta, double):
    """x^delta; double=True gives prod (x_i + y_j + beta x_i y_j), and
    double="plain" the undeformed prod (x_i + y_j)."""
    if double == "plain" or not double:
        return _seed(n, bool(double))
    out = ONE
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out = out * (X(i) + Y(j) + beta * X(i) * Y(j))
    return out


def grothendieck(w, beta="beta", variant="standard", double=False, path="min"):
    return _groth(tuple(w), _beta(beta), variant, double, path)


def dual_grothendieck(w, beta="beta", double=False, path="min"):
    return grothendieck(w, beta, "dual", double, path)


def _key_step(variant, beta, i, f):
    xi, xj = X(i), X(i + 1)
    if variant == "key":
        return divided_difference(xi * f, i)
    if variant == "reduced":
        return xj * divided_difference(f, i)
    if variant == "kg":
        return divided_difference((xi + beta * xi * xj) * f, i)
    if variant == "reduced_kg":
        return (xj + beta * xi * xj) * divided_difference(f, i)
    raise FamilyError("unknown key variant %r" % variant)


@lru_cache(maxsize=None)
def _key(alpha, variant, beta, path):
    if P.is_partition(alpha):
        return x_power(alpha)
    # alpha = s_i alpha' with alpha'_i > alpha'_{i+1}
    asc = [i for i in range(1, len(alpha)) if alpha[i - 1] < alpha[i]]
    i = asc[0] if path == "min" else asc[-1]
    return _key_step(variant, beta, i, _key(P.swap_comp(alpha, i), variant, beta, path))


def key(alpha, variant="key", beta="beta", path="min"):
    return _key(tuple(alpha), variant, _beta(beta), path)


def dz(w, path="min"):
    return _dz(tuple(w), path)


@lru_cache(maxsize=None)
def _dz(w, path):
    n = len(w)
    if w == P.longest(n):
        return _seed(n, False)
    i = _ascent(w, path)
    g = _dz(P.times_s(w, i), path)
    d = divided_difference
    return (1 + X(i)) * d(g, i) + d((X(i + 1) + X(i) * X(i + 1)) * g, i)


def kn_spec(beta="beta", alpha="alpha", gamma=0, h=1, convention="def46"):
    """Operator spec of the KN family.

    def46: (-beta, alpha+beta+gamma, gamma, h, h^-1 (beta+gamma)(alpha+gamma))
    sec1:  the same with beta and alpha exchanged, so the constant is -alpha.
    """
    beta, alpha, gamma, h = (Poly.coerce(v) for v in (beta, alpha, gamma, h))
    if h.is_zero():
        raise FamilyError("h must be nonzero")
    if convention == "sec1":
        beta, alpha = alpha, beta
    elif convention != "def46":
        raise FamilyError("unknown convention %r" % convention)
    hinv = h.inverse() if not h.is_constant() else None
    if hinv is None:
        if abs(h.constant()) != 1:
            raise FamilyError("h must be a unit")
        hinv = h
    e = hinv * (beta + gamma) * (alpha + gamma)
    return OperatorSpec.make(-beta, alpha + beta + gamma, gamma, h, e, "kn_" + convention)


DEFAULT_KN_CONVENTION = "def46"


def kn(w, beta="beta", alpha="alpha", gamma=0, h=1, convention=DEFAULT_KN_CONVENTION, word=None):
    """KN indexed by a word a1..al of w: T_{al} ... T_{a1} x^delta.

    The letters act in reading order, a1 first.  This is the published
    indexing of the KN tables; in leftmost-last order it is KN of w^-1.
    """
    w = tuple(w)
    spec = kn_spec(beta, alpha, gamma, h, convention)
    if word is None:
        word = P.reduced_word(w)
    return _apply_cached(spec, tuple(reversed(tuple(word))), len(w), False)


@lru_cache(maxsize=None)
def _apply_cached(spec, word, n, double):
    return apply_word_raw(spec, word, _seed(n, double))


def kn_by_word(word, n, **kw):
    return kn(P.from_word(word, n), word=word, **kw)


def generalized_schubert(spec, w, double=False, word=None):
    w = tuple(w)
    if not coxeter_valid(spec, check=False):
        raise FamilyError("spec %s does not satisfy the braid relation" % spec)
    if word is None:
        word = P.reduced_word(P.compose(P.inverse(w), P.longest(len(w))))
    return _apply_cached(spec, tuple(word), len(w), double)


def generalized_key(spec, alpha):
    alpha = tuple(alpha)
    if not coxeter_valid(spec, check=False):
        raise FamilyError("spec %s does not satisfy the braid relation" % spec)
    plus, _ = P.sort_composition(alpha)
    return apply_word_raw(spec, P.sorting_word(alpha), x_power(plus))


def generalized_family(spec, index, seed="staircase"):
    if seed == "monomial":
        return generalized_key(spec, index)
    return generalized_schubert(spec, index, double=(seed == "double"))


def bott_samelson(word, lam, v="v"):
    spec = bott_samelson_spec(v)
    f = x_power(lam)
    for i in reversed(tuple(word)):
        f = f + apply_T(spec, i, f)
    return f


def at_one(p):
    return p.evaluate_all(1)


def kn_duality_stability_check(n, convention=DEFAULT_KN_CONVENTION):
    """Duality KN_w(1) = (ba)^l KN_{w^-1}^{(1/a, 1/b)}(1) and index-shift stability."""
    from .poly import var
    b, a = var("beta"), var("alpha")
    out = {"duality": {}, "stability": {}}
    for w in P.all_perms(n):
        lhs = at_one(kn(w, b, a, convention=convention))
        rhs = (b * a) ** P.length(w) * at_one(
            kn(P.inverse(w), a.inverse(), b.inverse(), convention=convention))
        out["duality"][w] = lhs == rhs
        word = P.reduced_word(w)
        if word and max(word) <= n - 3:
            shifted = tuple(i + 1 for i in word)
            v = P.from_word(shifted, n)
            out["stability"][w] = at_one(kn(w, b, a, convention=convention)) == \
                at_one(kn(v, b, a, convention=convention, word=shifted))
    return out


# named-family dispatch used by the CLI and the expansion helper --------

def by_code_basis(kind, n, beta="beta"):
    """alpha -> family member indexed by code / composition alpha (None if invalid)."""
    def basis(alpha):
        alpha = tuple(alpha)[:n]
        if not P.in_staircase(alpha, n):
            return None
        if kind == "schubert":
            return schubert(P.code_to_perm(alpha, n))
        if kind == "grothendieck":
            return grothendieck(P.code_to_perm(alpha, n), beta)
        if kind == "neg_grothendieck":
            return grothendieck(P.code_to_perm(alpha, n), -Poly.coerce(beta))
        if kind == "key":
            return key(alpha)
        raise FamilyError("no triangular basis %r" % kind)
    return basis


def expand(p, kind, n, beta="beta"):
    return expand_in_family(p, by_code_basis(kind, n, beta), n)


def schur_from_tableaux(lam, r):
    """Combinatorial Schur polynomial s_lam(x_1..x_r) as a sum over SSYT."""
    from .plactic import ssyt
    out = Poly()
    for t in ssyt(lam, r):
        m = ONE
        for row in t:
            for a in row:
                m = m * X(a)
        out = out + m
    return out


def key_expand(p, n, max_steps=100000):
    """{alpha: c} with p = sum c K[alpha].  K[alpha] has x^alpha as its
    lex-smallest monomial, so peel that monomial off repeatedly."""
    from .poly import exponent_vector
    xs = ["x%d" % i for i in range(1, n + 1)]
    res, out = p, {}
    for _ in range(max_steps):
        if res.is_zero():
            return {k: v for k, v in out.items() if not v.is_zero()}
        split = res.coefficients(xs)
        m = min(split, key=lambda mm: exponent_vector(mm, n))
        alpha = exponent_vector(m, n)
        c = split[m]
        out[alpha] = out.get(alpha, Poly()) + c
        res = res - c * key(alpha)
    raise FamilyError("key expansion did not terminate")
