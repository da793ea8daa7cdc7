"""Finite quotients of plactic-type algebras: bases, Hilbert series, products."""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from . import perm as P
from . import plactic as W
from .poly import ONE, Poly


class QuotientError(ValueError):
    pass


BOUNDS = {"PC": 7, "PC#": 5, "NC": 7, "IC": 7, "NP": 6}


# A_n tableaux --------------------------------------------------------------

def in_A(t, n):
    """Entries <= n-1 and T(i, j) >= j (columns counted from 1)."""
    return all(v <= n - 1 and v >= j + 1 for row in t for j, v in enumerate(row))


def a_tableaux(n, lam=None):
    shapes = [lam] if lam is not None else W.partitions_in_staircase(n)
    out = []
    for mu in shapes:
        out.extend(W.ssyt(mu, n - 1, lower=lambda i, j: j + 1))
    return out


def good_row(row):
    return all(v >= a + 1 for a, v in enumerate(row))


def bad_row_generators(n):
    """Minimal weakly increasing words violating i_a >= a."""
    out = []
    for k in range(1, n + 1):
        for row in combinations_with_replacement(range(1, n), k):
            if not good_row(row) and good_row(row[:-1]):
                out.append(row)
    return out


def literal_generators(n):
    """Weakly increasing words of length n with #{a : i_a = j} <= j."""
    out = []
    for row in combinations_with_replacement(range(1, n + 1), n):
        if all(row.count(j) <= j for j in range(1, n + 1)) and max(row) <= n - 1:
            out.append(row)
    return out


def pc_ideal_crosscheck(n):
    """Reconcile the A_n basis with the monomial ideal of bad rows.

    Every A_n tableau class must avoid all bad factors, every other tableau
    of the same degree range must contain one, and each literal generator
    must normalize outside A_n.
    """
    gens = bad_row_generators(n)
    pres = W.Presentation("PCbad", n, W.preset("P", n).rules, frozenset(gens))
    lit = W.Presentation("PClit", n, W.preset("P", n).rules, frozenset(literal_generators(n)))
    report = {"a_tableaux_alive": True, "others_killed": True, "literal_outside": True,
              "literal_kills_others": True}
    top = n * (n - 1) // 2
    for size in range(top + 1):
        for lam in _partitions(size, n - 1):
            for t in W.ssyt(lam, n - 1):
                w = W.reading_word(t)
                info = W.closure(w, pres)
                if in_A(t, n) and info.zero:
                    report["a_tableaux_alive"] = False
                if not in_A(t, n):
                    if not info.zero:
                        report["others_killed"] = False
                    if not W.closure(w, lit).zero:
                        report["literal_kills_others"] = False
    for g in literal_generators(n):
        if in_A(W.rsk_insert(g), n):
            report["literal_outside"] = False
    report["literal_generators"] = len(literal_generators(n))
    return report


def _partitions(size, maxrows, maxpart=None):
    if maxpart is None:
        maxpart = size
    if size == 0:
        yield ()
        return
    if maxrows == 0:
        return
    for p in range(min(size, maxpart), 0, -1):
        for rest in _partitions(size - p, maxrows - 1, p):
            yield (p,) + rest


# algebra handles -----------------------------------------------------------

class Algebra:
    """A named quotient with a graded basis and a normal-form map.

    normalize(word) returns (c, rep) with u_word = c u_rep, or (None, None)
    when the word vanishes.
    """
    kind = "base"

    def __init__(self, name, n, **params):
        self.name = name
        self.n = n
        self.params = params
        self._basis = None

    def basis(self):
        if self._basis is None:
            self._basis = self._enumerate()
        return self._basis

    def hilbert(self):
        counts = {}
        for w in self.basis():
            d = self.degree(w)
            counts[d] = counts.get(d, 0) + 1
        top = max(counts) if counts else 0
        return [counts.get(d, 0) for d in range(top + 1)]

    def dim(self):
        return len(self.basis())

    def degree(self, w):
        return len(w)

    def element(self, terms):
        out = {}
        for w, c in terms.items():
            c0, rep = self.normalize(tuple(w))
            if rep is None:
                continue
            _add(out, rep, Poly.coerce(c) * c0 if not isinstance(c0, Fraction) else c * c0)
        return out

    def multiply(self, a, b):
        out = {}
        for u, cu in a.items():
            for v, cv in b.items():
                c, rep = self.normalize(tuple(u) + tuple(v))
                if rep is None:
                    continue
                _add(out, rep, _times(_times(cu, cv), c))
        return out

    def __repr__(self):
        return "%s(n=%d%s)" % (self.name, self.n, "".join(", %s=%s" % kv for kv in sorted(self.params.items())))


def _times(a, b):
    if isinstance(a, Poly) or isinstance(b, Poly):
        if isinstance(a, Fraction) or isinstance(b, Fraction):
            raise QuotientError("mixed symbolic and numeric scalars")
    return a * b


def _add(d, k, c):
    s = d.get(k)
    s = c if s is None else s + c
    if (isinstance(s, Poly) and s.is_zero()) or (not isinstance(s, Poly) and s == 0):
        d.pop(k, None)
    else:
        d[k] = s


class Free(Algebra):
    def normalize(self, w):
        return ONE, tuple(w)

    def _enumerate(self):
        raise QuotientError("the free algebra is infinite")


class Plactic(Algebra):
    """Plactic algebra, optionally cut down to PC_n (A_n tableaux) or PF_{n,k}."""

    def __init__(self, n, cut=None, k=None):
        name = {"PC": "PC", "PF": "PF", None: "P"}[cut]
        super().__init__(name, n, **({"k": k} if cut == "PF" else {}))
        self.cut = cut
        self.k = k

    def alive(self, t):
        if self.cut == "PC":
            return in_A(t, self.n)
        if self.cut == "PF":
            return not t or len(t[0]) < self.k
        return True

    def normalize(self, w):
        t = W.rsk_insert(tuple(w))
        if not self.alive(t):
            return None, None
        return ONE, W.reading_word(t)

    def _enumerate(self):
        if self.cut == "PC":
            if self.n > BOUNDS["PC"]:
                raise QuotientError("PC_n enumeration is bounded by n <= %d" % BOUNDS["PC"])
            ts = a_tableaux(self.n)
        elif self.cut == "PF":
            if self.n * self.k > 36:
                raise QuotientError("PF enumeration is bounded by nk <= 36")
            ts = []
            for lam in W.partitions_in_box(self.n - 1, self.k - 1):
                ts.extend(W.ssyt(lam, self.n - 1))
        else:
            raise QuotientError("the plactic algebra is infinite; use free_plactic_hilbert")
        return sorted((W.reading_word(t) for t in ts), key=lambda w: (len(w), w))

    def tableaux(self):
        return [W.rsk_insert(w) for w in self.basis()]


class PCSharp(Algebra):
    """PC_n modulo the commutations u_i u_j = u_j u_i, |i - j| >= 2."""

    def __init__(self, n):
        super().__init__("PC#", n)
        self._comp = None

    def _components(self):
        if self._comp is not None:
            return self._comp
        if self.n > BOUNDS["PC#"]:
            raise QuotientError("PC# is bounded by n <= %d" % BOUNDS["PC#"])
        n = self.n
        ts = a_tableaux(n)
        parent = {t: t for t in ts}
        parent[None] = None

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra == rb:
                return
            if ra is None or (rb is not None and W.reading_word(rb) < W.reading_word(ra)):
                ra, rb = rb, ra
            parent[rb] = ra  # None absorbs
            if rb is None:
                parent[ra] = None
                parent[None] = None

        for t in ts:
            for w in W.knuth_class(W.reading_word(t)):
                for s in range(len(w) - 1):
                    a, b = w[s], w[s + 1]
                    if abs(a - b) < 2:
                        continue
                    t2 = W.rsk_insert(w[:s] + (b, a) + w[s + 2:])
                    union(t, t2 if in_A(t2, n) else None)
        comp = {t: find(t) for t in ts}
        self._comp = comp
        return comp

    def normalize(self, w):
        t = W.rsk_insert(tuple(w))
        if not in_A(t, self.n):
            return None, None
        r = self._components()[t]
        if r is None:
            return None, None
        return ONE, W.reading_word(r)

    def _enumerate(self):
        reps = {r for r in self._components().values() if r is not None}
        return sorted((W.reading_word(r) for r in reps), key=lambda w: (len(w), w))


class Coxeter(Algebra):
    """NC_n (nil) or IC_n^(beta): basis u_w, w in S_n."""

    def __init__(self, n, beta=None):
        name = "NC" if beta is None else "IC"
        super().__init__(name, n, **({} if beta is None else {"beta": beta}))
        self.beta = None if beta is None else Poly.coerce(beta)
        self._red = W.Reducer(W.preset(name, n, beta=self.beta if beta is not None else 0))

    def normalize(self, w):
        return self._red.reduce(tuple(w))

    def _enumerate(self):
        return sorted((P.reduced_word(w) for w in P.all_perms(self.n)), key=lambda w: (len(w), w))

    def perm_of(self, word):
        return P.from_word(word, self.n)


class Nilplactic(Algebra):
    """Reduced words modulo Coxeter-Knuth moves; non-reduced words vanish.

    Basis: reading words of Edelman-Greene tableaux.
    """

    def __init__(self, n):
        super().__init__("NP", n)

    def normalize(self, w):
        w = tuple(w)
        if w and max(w) >= self.n:
            raise QuotientError("letter out of range")
        nf = W.eg_normal_form(w) if self._reduced(w) else None
        return (None, None) if nf is None else (ONE, nf)

    def _reduced(self, w):
        return not w or P.is_reduced(w, self.n)

    def _enumerate(self):
        if self.n > BOUNDS["NP"]:
            raise QuotientError("NP enumeration is bounded by n <= %d" % BOUNDS["NP"])
        out = set()
        for u in P.all_perms(self.n):
            for word in P.reduced_words(u):
                out.add(W.eg_normal_form(word))
        return sorted(out, key=lambda w: (len(w), w))


class Rewritten(Algebra):
    """Any preset handled by BFS closures (IP, TL0, TH, PTL, LP, MP, literal NP)."""

    def __init__(self, preset_name, n, max_degree=None, bound=None, **params):
        super().__init__(preset_name, n, **params)
        self.pres = W.preset(preset_name, n, **params)
        self.max_degree = max_degree if max_degree is not None else n * (n - 1) // 2 + 2
        self.bound = bound
        self._red = W.Reducer(self.pres, bound)

    def normalize(self, w):
        return self._red.reduce(tuple(w))

    def _enumerate(self):
        levels, red = W.graded_basis(self.pres, self.max_degree, self.bound)
        self._red = red
        out = [r for lvl in levels for r in lvl]
        return sorted(out, key=lambda w: (len(w), w))


class QPC(Algebra):
    """Reduced generalized plactic algebra: relations with weights q_ik, A_n cut."""

    def __init__(self, n, q=None):
        super().__init__("QPC", n, **({} if q is None else {"q": q}))
        self.pres = W.preset("QP", n, q=q)
        self._red = W.Reducer(self.pres)

    def normalize(self, w):
        t = W.rsk_insert(tuple(w))
        if not in_A(t, self.n):
            return None, None
        c, rep = self._red.reduce(tuple(w))
        return c, rep

    def _enumerate(self):
        out = []
        for t in a_tableaux(self.n):
            c, rep = self._red.reduce(W.reading_word(t))
            if rep is not None:
                out.append(rep)
        return sorted(out, key=lambda w: (len(w), w))

    def nonflat_classes(self):
        self.basis()
        return self._red.nonflat


def algebra(name, n, k=None, beta=1, q=None, **kw):
    """Handle by preset id."""
    if name == "P":
        return Plactic(n)
    if name == "FREE":
        return Free("FREE", n)
    if name == "PC":
        return Plactic(n, "PC")
    if name in ("PC#", "PCs", "PCSHARP"):
        return PCSharp(n)
    if name == "PF":
        if k is None:
            raise QuotientError("PF needs k")
        return Plactic(n, "PF", k)
    if name == "NC":
        return Coxeter(n)
    if name == "IC":
        return Coxeter(n, beta)
    if name == "NP":
        return Nilplactic(n)
    if name == "NP_literal":
        return Rewritten("NP", n, **kw)
    if name == "QPC":
        return QPC(n, q)
    if name in ("IP", "TH", "PTL"):
        return Rewritten(name, n, beta=beta, **kw)
    if name in ("TL0", "LP", "MP"):
        return Rewritten(name, n, **kw)
    raise QuotientError("unknown algebra %r" % name)


def pf_box(a, b):
    """PF algebra whose basis is B_{a,b}: b generators, rows shorter than a+1."""
    return Plactic(b + 1, "PF", a + 1)


# series --------------------------------------------------------------------

def hilbert(name, n, **kw):
    return algebra(name, n, **kw).hilbert()


def free_plactic_hilbert(n, degree):
    """Graded count of SSYT with entries <= n-1 (the plactic P_n)."""
    out = []
    for d in range(degree + 1):
        out.append(sum(sum(1 for _ in W.ssyt(lam, n - 1)) for lam in _partitions(d, n - 1)))
    return out


def series_coefficients(factors, degree):
    """Power series of prod (1 - t^j)^(-m) for (j, m) in factors."""
    c = [0] * (degree + 1)
    c[0] = 1
    for j, m in factors:
        for _ in range(m):
            for d in range(j, degree + 1):
                c[d] += c[d - j]
    return c


def pc_abelian_hilbert(n):
    """Commutative monomials in u_1..u_{n-1} not divisible by a bad row."""
    gens = [_content(g, n) for g in bad_row_generators(n)]
    out = []
    for d in range(0, n):
        cnt = 0
        for mono in combinations_with_replacement(range(1, n), d):
            c = _content(mono, n)
            if not any(all(c[i] >= g[i] for i in range(n)) for g in gens):
                cnt += 1
        out.append(cnt)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def pf_abelian_hilbert(n, k):
    out = []
    for d in range(k):
        out.append(sum(1 for _ in combinations_with_replacement(range(1, n), d)))
    return out


def _content(word, n):
    c = [0] * n
    for a in word:
        c[a - 1] += 1
    return tuple(c)


@lru_cache(maxsize=None)
def _prime_q(n):
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    out, k = {}, 0
    for i in range(1, n):
        for j in range(i + 1, n):
            out[(i, j)] = primes[k % len(primes)]
            k += 1
    return tuple(sorted(out.items()))


def flatness_probe(n, assignments=None):
    """Basis size of QPC_n under numeric q assignments.

    Each assignment maps (i, k) to a number; a class with inconsistent
    weights collapses.  Returns one record per assignment.
    """
    if assignments is None:
        assignments = [dict(_prime_q(n)), {k: 1 for k, _ in _prime_q(n)},
                       {k: -1 for k, _ in _prime_q(n)},
                       {(i, k): [2, 3, 5, 7][k - 2] for (i, k), _ in _prime_q(n)}]
    out = []
    for q in assignments:
        qf = {k: Fraction(v) for k, v in q.items()}
        alg = QPC(n, qf)
        out.append({"q": dict(q), "dim": alg.dim(), "collapsed": len(alg.nonflat_classes())})
    return out
