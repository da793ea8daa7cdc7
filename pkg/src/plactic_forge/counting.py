"""Closed forms, determinant counts and identity checks for tableau numbers.

The tableaux counted here are the semistandard tableaux T with entries at
most N-1 and T(i, j) >= j (columns 1-based), grouped by shape.  For N = n
these are the tableau words surviving in PC_n.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from . import families as F
from . import perm as P
from .plactic import conjugate, partitions_in_box, partitions_in_staircase, ssyt
from .poly import ONE, Poly, X, specialize, var


class CountingError(ValueError):
    pass


def binom(a, b):
    """Binomial that is 0 whenever an argument is negative or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def det(m):
    """Determinant over any commutative ring (Laplace expansion along rows,
    memoized on the set of used columns)."""
    size = len(m)
    if size == 0:
        return 1
    memo = {}

    def rec(row, used):
        if row == size:
            return 1
        key = (row, used)
        if key in memo:
            return memo[key]
        acc = 0
        sign = 1
        for j in range(size):
            if used >> j & 1:
                continue
            e = m[row][j]
            if e != 0:
                term = e * rec(row + 1, used | (1 << j))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc
    return rec(0, 0)


def coeffs(p, name="t"):
    """Coefficient list of a one-variable Poly in name (constants inside)."""
    if isinstance(p, int):
        return [p]
    out = {}
    for m, c in p.terms.items():
        e = dict(m).get(name, 0)
        if len(m) > (1 if e else 0):
            raise CountingError("%s is not a polynomial in %s alone" % (p, name))
        out[e] = out.get(e, 0) + c
    if not out:
        return [0]
    return [out.get(i, 0) for i in range(max(out) + 1)]


def from_coeffs(cs, name="t"):
    t = var(name)
    return sum((c * t ** i for i, c in enumerate(cs) if c), Poly())


# closed forms -------------------------------------------------------------

def asm(n):
    return int(prod(Fraction(factorial(3 * i + 1), factorial(n + i)) for i in range(n)))


def asm_refined(n, j):
    """Number of n x n ASMs whose first row has its 1 in column j."""
    if not 1 <= j <= n:
        return 0
    v = Fraction(comb(n + j - 2, j - 1) * factorial(2 * n - j - 1), factorial(n - j))
    v *= prod(Fraction(factorial(3 * i + 1), factorial(n + i)) for i in range(n - 1))
    return int(v)


def tspp(n):
    v = prod(Fraction(i + j + k - 1, i + j + k - 2)
             for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1))
    return int(v)


def pp(n):
    v = prod(Fraction(i + j + k - 1, i + j + k - 2)
             for i in range(1, n + 1) for j in range(1, n + 1) for k in range(1, n + 1))
    return int(v)


def b_nk(n, k):
    """Tableaux with at most n columns and entries <= k."""
    v = prod(Fraction(i + j + n - 1, i + j - 1) for i in range(1, k + 1) for j in range(i, k + 1))
    return int(v)


def b_nk_binomial(n, k):
    """The alternative product of binomial ratios for b_nk."""
    v = prod(Fraction(comb(n + 2 * k - 2 * a - 1, n), comb(n + 2 * a, n))
             for a in range(0, (k - 1) // 2 + 1))
    return int(v)


def spp(n):
    """Symmetric plane partitions, through b_nk(n - 1, n - 1)."""
    return b_nk(n - 1, n - 1)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def schroeder(n):
    """Large Schroeder numbers 1, 2, 6, 22, 90, ..."""
    s = [1]
    for m in range(1, n + 1):
        s.append(s[-1] + sum(s[k] * s[m - 1 - k] for k in range(m)))
    return s[n]


def bernoulli(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b[n]


def genocchi1(m):
    """Unsigned Genocchi numbers of the first kind G_m: G_2 = G_4 = 1, G_6 = 3, G_8 = 17."""
    if m < 2 or m % 2:
        return 0
    return int(abs(2 * (2 ** m - 1) * bernoulli(m)))


def genocchi2(n):
    """Median Genocchi numbers 1, 2, 8, 56, 608, 9440 for n = 1, 2, ..."""
    return sum((-1) ** k * comb(n, 2 * k + 1) * genocchi1(2 * n - 2 * k) for k in range((n + 1) // 2))


def forests(n):
    """Forests of unrooted trees on n labelled nodes: 1, 1, 2, 7, 38, 291."""
    f = [1]
    for m in range(1, n + 1):
        f.append(sum(comb(m - 1, k - 1) * (k ** (k - 2) if k >= 2 else 1) * f[m - k]
                     for k in range(1, m + 1)))
    return f[n]


def kostka(lam, content):
    """Number of SSYT of shape lam and the given content."""
    content = tuple(content)
    r = len(content)
    return sum(1 for t in ssyt(lam, r) if _content(t, r) == content)


def _content(t, r):
    c = [0] * r
    for row in t:
        for v in row:
            c[v - 1] += 1
    return tuple(c)


def closed_form(name, *args):
    table = {
        "asm": asm, "asm_refined": asm_refined, "tspp": tspp, "spp": spp, "pp": pp,
        "catalan": catalan, "schroeder": schroeder, "genocchi1": genocchi1,
        "genocchi2": genocchi2, "b_nk": b_nk, "kostka": kostka, "forests": forests,
        "a_lambda": lambda lam, N: a_lambda(lam, N),
    }
    if name not in table:
        raise CountingError("unknown sequence %r" % name)
    return table[name](*args)


SEQUENCES = ("asm", "tspp", "spp", "pp", "catalan", "schroeder", "genocchi1", "genocchi2", "forests")


def sequence(name, upto):
    """(n, value) rows for the one-argument sequences."""
    if name not in SEQUENCES:
        raise CountingError("sequence %r needs more than one argument" % name)
    start = {"genocchi1": 1, "spp": 1, "asm": 1, "tspp": 1, "pp": 1, "genocchi2": 1}.get(name, 0)
    f = closed_form
    if name == "genocchi1":
        return [(n, f(name, 2 * n)) for n in range(start, upto + 1)]
    return [(n, f(name, n)) for n in range(start, upto + 1)]


# A_n(lambda; N) ----------------------------------------------------------

def _size(lam):
    lam = tuple(p for p in lam if p)
    return lam, conjugate(lam) if lam else ()


def tableaux(lam, N):
    """SSYT of shape lam with entries <= N - 1 and T(i, j) >= j."""
    lam = tuple(p for p in lam if p)
    return list(ssyt(lam, N - 1, lower=lambda i, j: j + 1))


def top_count(t, top):
    return sum(1 for row in t for v in row if v == top)


def a_lambda(lam, N, mode="count"):
    """|A(lam; N)| by the binomial determinant.

    mode "t-poly" gives the coefficients of the t-determinant, "enumerate"
    the (tableau, lam_1 - #entries equal to N - 1) pairs.

    The determinant runs over the columns of lam, so its size is lam_1.
    """
    lam, lc = _size(lam)
    L = len(lc)
    if mode == "count":
        return det([[binom(N - i, lc[j - 1] - j + i) for j in range(1, L + 1)]
                    for i in range(1, L + 1)])
    if mode == "t-poly":
        t = var("t")
        m = [[binom(N - i - 1, lc[j - 1] - j + i - 1) + t * binom(N - i - 1, lc[j - 1] - j + i)
              for j in range(1, L + 1)] for i in range(1, L + 1)]
        return coeffs(Poly.coerce(det(m)))
    if mode == "enumerate":
        lam1 = lam[0] if lam else 0
        return [(t, lam1 - top_count(t, N - 1)) for t in tableaux(lam, N)]
    raise CountingError("unknown mode %r" % mode)


def enumerated_t_poly(lam, N, statistic="literal"):
    """Coefficients of sum t^stat over tableaux(lam, N).

    literal: lam_1 - #(entries equal to N - 1), the determinant statistic.
    top: #(entries equal to N - 1).
    """
    lam = tuple(p for p in lam if p)
    lam1 = lam[0] if lam else 0
    acc = {}
    for t in tableaux(lam, N):
        c = top_count(t, N - 1)
        e = lam1 - c if statistic == "literal" else c
        acc[e] = acc.get(e, 0) + 1
    return [acc.get(i, 0) for i in range(max(acc) + 1)] if acc else [0]


def add_coeffs(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


CANONICAL_ORDER_4 = [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1),
                     (3, 2), (3, 1, 1), (2, 2, 1), (3, 2, 1)]


def refined_vector(n, order=None):
    """(lam, |A(lam; n)|) over lam inside the staircase of size n."""
    lams = order if order is not None else list(partitions_in_staircase(n))
    return [(tuple(l), a_lambda(l, n)) for l in lams]


def refined_asm_check(n):
    """Sum over lam of the t-statistics against sum_j A_{n,j} t^(j-1)."""
    target = [asm_refined(n, j) for j in range(1, n + 1)]
    while len(target) > 1 and target[-1] == 0:
        target.pop()
    det_sum, top_sum = [0], [0]
    for lam in partitions_in_staircase(n):
        det_sum = add_coeffs(det_sum, a_lambda(lam, n, "t-poly") if lam else [1])
        top_sum = add_coeffs(top_sum, enumerated_t_poly(lam, n, "top"))
    return {"n": n, "target": target, "literal": det_sum, "literal_ok": det_sum == target,
            "top": top_sum, "top_ok": top_sum == target}


def determinant_vs_enumeration(n_max=4, N_max=7):
    bad = []
    for N in range(1, N_max + 1):
        for lam in partitions_in_staircase(n_max):
            if a_lambda(lam, N) != len(tableaux(lam, N)):
                bad.append((lam, N, "count"))
            if lam and a_lambda(lam, N, "t-poly") != enumerated_t_poly(lam, N):
                bad.append((lam, N, "t"))
    return bad


# column multi-Schur ----------------------------------------------------------

def elementary(k, m):
    """e_k(x_1..x_m)."""
    if k < 0 or k > m:
        return Poly()
    if k == 0:
        return ONE
    return _elementary(k, m)


@lru_cache(maxsize=None)
def _elementary(k, m):
    if k == 0:
        return ONE
    if k > m:
        return Poly()
    return _elementary(k, m - 1) + X(m) * _elementary(k - 1, m - 1)


def column_multischur(lam, N, t=False):
    """det e_{lam'_j - j + i}(X_{N-i}); with t, the t-deformed determinant
    x_{N-i} e_{..-1}(X_{N-i-1}) + t e_{..}(X_{N-i-1})."""
    lam, lc = _size(lam)
    L = len(lc)
    rng = range(1, L + 1)
    if not t:
        m = [[elementary(lc[j - 1] - j + i, N - i) for j in rng] for i in rng]
    else:
        tv = var("t")
        m = [[(X(N - i) if N - i >= 1 else Poly()) * elementary(lc[j - 1] - j + i - 1, N - i - 1)
              + tv * elementary(lc[j - 1] - j + i, N - i - 1) for j in rng] for i in rng]
    return Poly.coerce(det(m))


def principal(p, N, q="q"):
    qv = var(q)
    return specialize(p, {"x%d" % i: qv ** (i - 1) for i in range(1, N + 1)})


def q_binomial(a, b, q="q"):
    if b < 0 or b > a:
        return Poly()
    qv = var(q)
    out = ONE
    for i in range(b):
        num = ONE - qv ** (a - i)
        den = ONE - qv ** (i + 1)
        out = exact_div(out * num, den, q)
    return out


def exact_div(num, den, name="q"):
    """Division of one-variable polynomials that must be exact."""
    a, b = coeffs(num, name), coeffs(den, name)
    a = a[:]
    out = [0] * max(len(a) - len(b) + 1, 1)
    for i in range(len(a) - len(b), -1, -1):
        c = Fraction(a[i + len(b) - 1], b[-1])
        if c.denominator != 1:
            raise CountingError("inexact division")
        out[i] = int(c)
        for j, bj in enumerate(b):
            a[i + j] -= out[i] * bj
    if any(a):
        raise CountingError("inexact division")
    return from_coeffs(out, name)


def principal_example():
    """A_{(2,1)}(5; t, q) against q[4,2] + t (q + q^2)^3 + t^2 q^5 [3,1].

    Also compares after t -> 1/t (times t^2), coefficient by coefficient.
    """
    lhs = principal(column_multischur((2, 1), 5, t=True), 5)
    q, t = var("q"), var("t")
    parts = [q * q_binomial(4, 2), (q + q * q) ** 3, q ** 5 * q_binomial(3, 1)]
    rhs = sum((p * t ** i for i, p in enumerate(parts)), Poly())
    got = [t_part(lhs, i) for i in range(3)]
    return {"computed": lhs, "expected": rhs, "ok": lhs == rhs,
            "reversed_matches": [got[2 - i] == parts[i] for i in range(3)]}


def t_part(p, e, name="t"):
    out = {}
    for m, c in p.terms.items():
        if dict(m).get(name, 0) == e:
            mm = tuple((v, k) for v, k in m if v != name)
            out[mm] = out.get(mm, 0) + c
    return Poly(out)


def nonnegativity_check(n, N):
    """s*_lam(X_N) nonnegative for lam inside delta_n with N >= lam_1 + lam'_{l(lam)}."""
    out = []
    for lam in partitions_in_staircase(n):
        if not lam:
            continue
        lc = conjugate(lam) + (0,) * len(lam)
        if N < lam[0] + lc[len(lam) - 1]:
            continue
        out.append((lam, column_multischur(lam, N).nonnegative()))
    return out


def _reverse_exponents(p, D):
    out = {}
    for m, c in p.terms.items():
        d = dict(m)
        names = ["x%d" % i for i in range(1, D[0] + 1)]
        mm = tuple((v, D[1] - d.get(v, 0)) for v in names if D[1] - d.get(v, 0))
        out[mm] = out.get(mm, 0) + c
    return Poly(out)


def rectangle_check(n, k):
    """s*_{(n^k)}(X_{n+k}) against M_{n,k} times the Schubert polynomial of
    [1..k, n+k, ..., k+1] in inverted variables, both sides cleared by
    prod x_a^D."""
    N = n + k
    lhs = column_multischur((n,) * k, N)
    w = tuple(range(1, k + 1)) + tuple(range(N, k, -1))
    s = F.schubert(w)
    D = N
    # S(x^-1) * prod x^D is a polynomial
    s_inv = _reverse_exponents(s, (N, D))
    mono = ONE
    for a in range(1, N + 1):
        mono = mono * X(a) ** (min(N - a + 1, n))
    lhs_cleared = lhs * prod((X(a) for a in range(1, k + 1)), start=ONE) * \
        prod((X(a) ** D for a in range(1, N + 1)), start=ONE)
    rhs_cleared = mono * s_inv
    return {"n": n, "k": k, "lhs": lhs, "ok": lhs_cleared == rhs_cleared,
            "lhs_degree": lhs.degree() if not lhs.is_zero() else None,
            "rhs_degree": sum(min(N - a + 1, n) for a in range(1, N + 1)) - k - P.length(w)}


# Genocchi ----------------------------------------------------------------

def staircase(n):
    return tuple(range(n - 1, 0, -1))


def genocchi_suite(n):
    if n > 6:
        raise CountingError("genocchi suite is bounded by n <= 6")
    d = staircase(n)
    a1 = a_lambda(d, n + 1, "t-poly")
    a2 = a_lambda(d, n + 2, "t-poly")
    t = var("t")
    printed_product = coeffs(prod((1 + j * t for j in range(2, n + 1)), start=ONE))
    shifted_product = coeffs(prod((t + j for j in range(1, n)), start=ONE))
    at_minus_one = sum(c * (-1) ** i for i, c in enumerate(a2))
    rep = {
        "n": n,
        "A(n+1;t)": a1,
        "product_2..n(1+jt)": printed_product,
        "product_ok": a1 == printed_product,
        "product_1..n-1(t+j)": shifted_product,
        "shifted_product_ok": a1 == shifted_product,
        "A(n+2;t)": a2,
        "at_zero": a2[0],
        "at_zero_ok": a2[0] == genocchi1(2 * n),
        "at_one": sum(a2),
        "at_one_ok": sum(a2) == genocchi1(2 * n + 2),
        "at_minus_one": at_minus_one,
        "sign_ok": at_minus_one == (-1) ** n,
        "sign_shifted_ok": at_minus_one == (-1) ** (n + 1),
    }
    if n >= 2 and n <= 5:
        rep.update(genocchi_split(n))
    return rep


def genocchi_split(n):
    """Split s*_{delta_n}(X_{n+2}; t) by the degree in x_{n+1} and set the
    other variables to 1."""
    p = column_multischur(staircase(n), n + 2, t=True)
    split = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.get("x%d" % (n + 1), 0)
        te = d.get("t", 0)
        split.setdefault(e, {})
        split[e][te] = split[e].get(te, 0) + c
    parts = {e: [v.get(i, 0) for i in range(max(v) + 1)] for e, v in split.items()}
    a1 = parts.get(0, [0])
    a2 = parts.get(1, [0])
    return {
        "split_degrees": sorted(parts),
        "A1": a1,
        "A2": a2,
        "A1_at_one": sum(a1),
        "A1_at_one_ok": sum(a1) == genocchi2(n),
        "A1_top": a1[-1],
        "A1_top_ok": a1[-1] == factorial(n),
        "A2_at_zero": a2[0],
        "A2_at_zero_ok": a2[0] == genocchi1(2 * n),
    }


# identities ----------------------------------------------------------------

def b_tableaux(n, k):
    """(shape, tableau) with at most n columns and entries <= k."""
    for lam in partitions_in_box(k, n):
        for t in ssyt(lam, k):
            yield lam, t


def b_q_polynomial(n, k=None, grading="size"):
    """Coefficients of the generating polynomial of b_tableaux(n, k).

    grading "size" uses q^|lam|; "top" uses q^(lam_1 - #entries equal to k).
    """
    k = n if k is None else k
    acc = {}
    for lam, t in b_tableaux(n, k):
        lam = tuple(p for p in lam if p)
        if grading == "size":
            e = sum(lam)
        elif grading == "top":
            e = (lam[0] if lam else 0) - top_count(t, k)
        else:
            raise CountingError("unknown grading %r" % grading)
        acc[e] = acc.get(e, 0) + 1
    return [acc.get(i, 0) for i in range(max(acc) + 1)]


def kostka_identity(n):
    """sum_lam K_{rho_n, lam} multinomial(n; m(lam)) and sum of multinomials."""
    rho = staircase(n)
    total = n * (n - 1) // 2
    s1 = s2 = 0
    for lam in _partitions(total, n, n - 1):
        if not _dominated(lam, rho):
            continue
        full = lam + (0,) * (n - len(lam))
        mult = factorial(n)
        for v in set(full):
            mult //= factorial(full.count(v))
        s1 += kostka(rho, full) * mult
        s2 += mult
    return {"n": n, "kostka_sum": s1, "kostka_ok": s1 == 2 ** (n * (n - 1) // 2),
            "multinomial_sum": s2, "forests_ok": s2 == forests(n)}


def _partitions(total, parts, largest):
    if total == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _dominated(lam, mu):
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def staircase_forms(n):
    """Closed forms for single-row, single-column, two-row and staircase
    shapes against the determinant count with N = n."""
    rows = []

    def add(name, got, want):
        rows.append({"name": name, "computed": got, "formula": want, "ok": got == want})
    add("delta_n", a_lambda(staircase(n), n), 1)
    add("delta_{n-1}", a_lambda(staircase(n - 1), n), factorial(n - 1))
    add("(n-1)", a_lambda((n - 1,), n), catalan(n - 1))
    for k in range(1, n):
        add("(1^%d)" % k, a_lambda((1,) * k, n), binom(n - 1, k))
        add("(%d)" % k, a_lambda((k,), n), int(Fraction(n - k, n) * comb(n + k - 1, k)))
    for k in range(2, n):
        for l in range(2, k + 1):
            if n < k + 2:
                continue
            v = Fraction((n - k) * (n - l + 1) * (k - l + 1) * (n * n - n - l * (k + 1)),
                         factorial(l) * (k + 1) * k * (n + k)) * comb(n + k, k - 1)
            v *= prod(range(n + 1, n + l - 1), start=1)
            add("(%d,%d)" % (k, l), a_lambda((k, l), n), v)
    return rows


def rectangle_forms(n, k, N=None):
    """Rectangular-shape counts against closed forms.

    The Catalan determinant and the double product count k rows of length n
    (and of length n + 1) with entries <= n + k.  The general product in N
    counts n rows of length k with entries <= N - 1.
    """
    rows = []

    def add(name, got, want):
        rows.append({"name": name, "computed": got, "formula": want, "ok": got == want})
    M = n + k + 1
    got = a_lambda((n,) * k, M)
    add("(n+1)^k", a_lambda((n + 1,) * k, M), got)
    add("catalan_det", got, det([[catalan(n + i + j - 1) for j in range(1, k + 1)]
                                 for i in range(1, k + 1)]))
    p = prod(Fraction(i + j + 2 * k, i + j) for i in range(1, n + 1) for j in range(i, n + 1))
    add("product", got, p)
    for N in ([N] if N is not None else range(n + k, n + k + 4)):
        v = Fraction(1)
        for i in range(1, k + 1):
            for j in range(1, n + 1):
                if j - i <= n - k:
                    v *= Fraction(N - i - j + 1, i + j - 1)
                else:
                    v *= Fraction(N + i + j - 1, i + j - 1)
        add("general N=%d" % N, a_lambda((k,) * n, N), v)
    return rows


def b_n3_claim(upto=6):
    """B_{n+3,n} against TSPP(n+1) ASM(n+1) / 2 and B_{n+1,n+1} / 2 (reported)."""
    rows = []
    for n in range(1, upto + 1):
        b = b_nk(n + 3, n)
        rows.append({"n": n, "B": b, "half_tspp_asm": Fraction(tspp(n + 1) * asm(n + 1), 2),
                     "half_tspp_n_asm": Fraction(tspp(n) * asm(n + 1), 2),
                     "half_B": Fraction(b_nk(n + 1, n + 1), 2)})
    return rows


def pf2_hilbert_formula(n):
    return [comb(n, k // 2) * comb(n, (k + 1) // 2) for k in range(2 * n + 1)]


def identity_suite(upto=5):
    """Every identity as a list of {name, instance, lhs, rhs, ok} rows."""
    rows = []

    def add(name, inst, lhs, rhs):
        rows.append({"name": name, "instance": inst, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs})
    # tspp(n) counts inside the n-box: 1, 2, 5, 16, 66 for n = 0..4
    for n in range(1, upto + 1):
        add("B_nn = TSPP(n) ASM(n)", n, b_nk(n, n), tspp(n) * asm(n))
        add("B_n,n+1 = TSPP(n) ASM(n+1)", n, b_nk(n, n + 1), tspp(n) * asm(n + 1))
        add("B_n+2,n = B_n,n+1", n, b_nk(n + 2, n), b_nk(n, n + 1))
        add("B_4n = Cat(n+1) Cat(n+2) / 2", n, b_nk(4, n), Fraction(catalan(n + 1) * catalan(n + 2), 2))
        add("B_nk binomial form", n, b_nk(n, n), b_nk_binomial(n, n))
        add("SPP(n+1) = B_nn", n, spp(n + 1), b_nk(n, n))
        add("B_n+3,n = TSPP(n+1) ASM(n+1) / 2", n, b_nk(n + 3, n),
            Fraction(tspp(n + 1) * asm(n + 1), 2))
        add("B_n+3,n = B_n+1,n+1 / 2", n, b_nk(n + 3, n), Fraction(b_nk(n + 1, n + 1), 2))
    for n in range(1, min(upto, 4) + 1):
        for k in range(1, 5):
            add("B_nk = enumeration", (n, k), b_nk(n, k), sum(1 for _ in b_tableaux(n, k)))
    for n in range(2, min(upto, 5) + 1):
        r = kostka_identity(n)
        add("sum K multinomial = 2^C(n,2)", n, r["kostka_sum"], 2 ** (n * (n - 1) // 2))
        add("sum multinomial = forests", n, r["multinomial_sum"], forests(n))
    for n in range(2, upto + 1):
        for r in staircase_forms(n):
            add("staircase shape " + r["name"], n, r["computed"], r["formula"])
    for n, k in ((1, 1), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3)):
        for r in rectangle_forms(n, k):
            add("rectangle " + r["name"], (n, k), r["computed"], r["formula"])
    for n in range(1, upto + 1):
        add("sum A(lam; n) = ASM(n)", n, sum(a_lambda(l, n) for l in partitions_in_staircase(n)), asm(n))
        add("sum_j A_{n,j} = ASM(n)", n, sum(asm_refined(n, j) for j in range(1, n + 1)), asm(n))
        add("A_{n+1,1} = ASM(n)", n, asm_refined(n + 1, 1), asm(n))
    for name in ("PP(n) = ASM(n) x ASMHT(2n)",):
        rows.append({"name": name, "instance": None, "skipped": "no closed formula for the half-turn count",
                     "ok": None})
    return rows


def golden_b3():
    return b_q_polynomial(3)
