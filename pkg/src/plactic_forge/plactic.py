"""Words in u_1..u_{n-1}: insertion algorithms, compatible sequences and a
weighted rewriting engine for plactic-type presentations.

A relation (A, B, c) reads u_A = c u_B.  Scalars are Poly (formal
parameters, Laurent in q's and beta) or Fraction (numeric probes).
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import perm as P
from .poly import ONE, Poly, var


class RewriteError(ValueError):
    pass


# tableaux ------------------------------------------------------------------

def rsk_insert(word):
    rows = []
    for x in word:
        for row in rows:
            k = next((i for i, y in enumerate(row) if y > x), None)
            if k is None:
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def reading_word(t):
    """Columns bottom to top, left to right."""
    out = []
    for j in range(len(t[0]) if t else 0):
        out.extend(t[i][j] for i in reversed(range(len(t))) if j < len(t[i]))
    return tuple(out)


def from_reading_word(w):
    """Inverse of reading_word on tableau words (None if w is not one)."""
    t = rsk_insert(w)
    return t if reading_word(t) == tuple(w) else None


def rsk_normal_form(w):
    return reading_word(rsk_insert(tuple(w)))


def is_tableau_word(w):
    return rsk_normal_form(w) == tuple(w)


def shape(t):
    return tuple(len(r) for r in t)


def conjugate(lam):
    lam = [p for p in lam if p]
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def is_row_strict(t):
    return all(r[i] < r[i + 1] for r in t for i in range(len(r) - 1))


def ssyt(lam, maxval, minval=1, lower=None):
    """Semistandard tableaux of shape lam, entries in [minval, maxval].

    lower(i, j) optionally gives a lower bound for the entry in row i,
    column j (both 0-based).
    """
    lam = tuple(p for p in lam if p)
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    t = [[0] * p for p in lam]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        lo = minval
        if j:
            lo = max(lo, t[i][j - 1])
        if i:
            lo = max(lo, t[i - 1][j] + 1)
        if lower is not None:
            lo = max(lo, lower(i, j))
        # room for the rows below in this column
        below = sum(1 for r in range(i + 1, len(lam)) if lam[r] > j)
        for v in range(lo, maxval - below + 1):
            t[i][j] = v
            yield from rec(k + 1)
    yield from rec(0)


def partitions_in_box(rows, cols):
    def rec(i, bound):
        if i == rows:
            yield ()
            return
        for p in range(bound, -1, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest
    for lam in rec(0, cols):
        yield tuple(p for p in lam if p)


def partitions_in_staircase(n):
    """Partitions with lam_i <= n - i."""
    def rec(i, bound):
        if i > n - 1 or bound == 0:
            yield ()
            return
        for p in range(min(bound, n - i), -1, -1):
            if p == 0:
                yield ()
                continue
            for rest in rec(i + 1, p):
                yield (p,) + rest
    return list(rec(1, n - 1))


# Edelman-Greene ------------------------------------------------------------

def eg_insert(word):
    """Edelman-Greene tableau of a reduced word (None if not reduced)."""
    word = tuple(word)
    if word and not P.is_reduced(word, max(word) + 1):
        return None
    rows = []
    for x in word:
        for row in rows:
            k = next((i for i, y in enumerate(row) if y > x), None)
            if k is None:
                row.append(x)
                break
            y = row[k]
            if y == x + 1 and x in row:
                x = y
            else:
                row[k], x = x, y
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def eg_normal_form(w):
    t = eg_insert(w)
    return None if t is None else reading_word(t)


# compatible sequences ------------------------------------------------------

def compatible_b(a):
    """All b with b weakly increasing, 1 <= b_i <= a_i, and b_i < b_{i+1}
    whenever a_i <= a_{i+1}."""
    a = tuple(a)
    out = []

    def rec(i, prev, acc):
        if i == len(a):
            out.append(tuple(acc))
            return
        lo = 1 if i == 0 else prev + (1 if a[i - 1] <= a[i] else 0)
        for b in range(lo, a[i] + 1):
            acc.append(b)
            rec(i + 1, b, acc)
            acc.pop()
    rec(0, 0, [])
    return out


def compatible_sequences(w, mode="C", bound=None, klass=None):
    """Pairs (a, b) with a in the class of the word w and b compatible with a.

    mode C: plactic class (klass may be set to 'nilplactic').
    mode IC: idplactic class at beta=1, words of length <= bound.
    """
    w = tuple(w)
    if mode == "C":
        klass = klass or "plactic"
        if klass == "plactic":
            words = knuth_class(w)
        elif klass == "nilplactic":
            words = set(closure(w, preset("NP", _alphabet(w))).members)
        else:
            raise RewriteError("unknown class %r" % klass)
    elif mode == "IC":
        if bound is None:
            raise RewriteError("IC mode needs an explicit length bound")
        words = set(closure(w, preset("IP", _alphabet(w), beta=1), bound=bound).members)
    else:
        raise RewriteError("unknown mode %r" % mode)
    return sorted((a, b) for a in words for b in compatible_b(a))


def _alphabet(w):
    return max(w, default=0) + 2


def pair_monomial(a, b):
    """prod p_{b_i, a_i - b_i + 1}."""
    out = ONE
    for ai, bi in zip(a, b):
        out = out * var("p%d_%d" % (bi, ai - bi + 1))
    return out


def bottom_code(w, length=None):
    """Lex-smallest exponent of x^b over the compatible sequences of the
    plactic class of w."""
    w = tuple(w)
    if not w:
        return tuple([0] * (length or 0))
    m = max(w) + 1
    best = None
    for _, b in compatible_sequences(w):
        e = [0] * m
        for bi in b:
            e[bi - 1] += 1
        e = tuple(e)
        if best is None or e < best:
            best = e
    if best is None:
        return None
    if length is not None:
        best = (best + (0,) * length)[:length]
    return best


def double_key_from_sequences(w, mode="C", bound=None):
    out = Poly()
    for a, b in compatible_sequences(w, mode, bound):
        out = out + pair_monomial(a, b)
    return out


# presentations -------------------------------------------------------------

def _scalar_mul(a, b):
    return a * b


def _scalar_div(a, b):
    if isinstance(b, Poly):
        if b.is_constant() and abs(b.constant()) == 1:
            return a * b
        return a * b.inverse()
    return a / b


@dataclass
class Presentation:
    name: str
    n: int
    rules: list = field(default_factory=list)    # (A, B, c): u_A = c u_B
    killers: frozenset = frozenset()             # monomials set to zero
    params: dict = field(default_factory=dict)

    @property
    def letters(self):
        return tuple(range(1, self.n))

    @property
    def homogeneous(self):
        return all(len(a) == len(b) for a, b, _ in self.rules)

    def is_zero_word(self, w):
        for k in self.killers:
            L = len(k)
            for s in range(len(w) - L + 1):
                if w[s:s + L] == k:
                    return True
        return False

    def describe(self):
        lines = ["%s_%d" % (self.name, self.n)]
        for a, b, c in self.rules:
            lines.append("  u%s = %s u%s" % (P.word_str(a), c, P.word_str(b)))
        for k in sorted(self.killers):
            lines.append("  u%s = 0" % P.word_str(k))
        return "\n".join(lines)


def _pl1(n):
    out = []
    for i, j, k in combinations(range(1, n), 3):
        out.append(((j, i, k), (j, k, i)))
        out.append(((i, k, j), (k, i, j)))
    return out


def _pl2(n):
    out = []
    for i, j in combinations(range(1, n), 2):
        out.append(((i, j, i), (j, i, i)))
        out.append(((j, i, j), (j, j, i)))
    return out


def _commute(n):
    return [((i, j), (j, i)) for i in range(1, n) for j in range(i + 2, n)]


def _squares(n, beta):
    beta = Poly.coerce(beta) if not isinstance(beta, Fraction) else beta
    if _scalar_is_zero(beta):
        return [], {(i, i) for i in range(1, n)}
    return [((i, i), (i,), beta) for i in range(1, n)], set()


def _scalar_is_zero(c):
    return c.is_zero() if isinstance(c, Poly) else c == 0


def _q(q, i, k):
    if q is None:
        return var("q%d_%d" % (i, k))
    if isinstance(q, dict):
        v = q[(i, k)]
    elif callable(q):
        v = q(i, k)
    else:
        v = q
    return Fraction(v) if isinstance(v, (int, Fraction)) else Poly.coerce(v)


def _qp_rules(n, q):
    rules = []
    for i in range(1, n):
        for k in range(i + 1, n):
            c = _q(q, i, k)
            for j in range(i + 1, k + 1):      # i < j <= k
                rules.append(((j, k, i), (j, i, k), c))
            for j in range(i, k):              # i <= j < k
                rules.append(((k, i, j), (i, k, j), c))
    return rules


PRESETS = ("FREE", "P", "QP", "OPL", "LP", "TL0", "TH", "MP", "NP", "IP", "NC", "IC", "PTL")


def preset(name, n, beta="beta", q=None):
    """Presentation by preset id.  beta feeds TH/IP/IC/PTL, q feeds QP."""
    one = ONE
    rules, killers = [], set()

    def plain(pairs):
        rules.extend((a, b, one) for a, b in pairs)

    if name == "FREE":
        pass
    elif name == "P":
        plain(_pl1(n) + _pl2(n))
    elif name == "QP":
        rules.extend(_qp_rules(n, q))
    elif name == "OPL":
        rules.extend(_qp_rules(n, -1))
    elif name in ("LP", "TL0", "TH"):
        plain(_commute(n))
        for i in range(1, n - 1):
            j = i + 1
            plain([((j, i, i), (i, j, i)), ((j, j, i), (j, i, j))])
        if name == "TL0":
            killers |= {(i, i) for i in range(1, n)}
        elif name == "TH":
            r, k = _squares(n, beta)
            rules.extend(r)
            killers |= k
    elif name == "MP":
        plain(_pl1(n))
        for i, j in combinations(range(1, n), 2):
            plain([((j, j, i), (j, i, i)), ((i, j, i), (j, i, j))])
    elif name in ("NP", "NC"):
        killers |= {(i, i) for i in range(1, n)}
        plain([((i, i + 1, i), (i + 1, i, i + 1)) for i in range(1, n - 1)])
        plain(_pl1(n))
        plain([((i, j, i), (j, i, j)) for i in range(1, n) for j in range(i + 2, n)])
        if name == "NC":
            plain(_commute(n))
    elif name in ("IP", "IC", "PTL"):
        r, k = _squares(n, beta)
        rules.extend(r)
        killers |= k
        plain([((i, j, i), (j, i, j)) for i, j in combinations(range(1, n), 2)])
        plain(_pl1(n))
        if name == "IC":
            plain(_commute(n))
        if name == "PTL":
            killers |= {(i, j, i) for i in range(1, n) for j in range(1, n) if i != j}
    else:
        raise RewriteError("unknown preset %r" % name)
    params = {"beta": beta} if name in ("TH", "IP", "IC", "PTL") else {}
    if name == "QP":
        params = {"q": q}
    return Presentation(name, n, rules, frozenset(killers), params)


# closure -------------------------------------------------------------------

@dataclass
class ClassInfo:
    start: tuple
    members: dict          # word -> c with start = c * word
    zero: bool
    flat: bool
    conflicts: list
    rep: tuple = None
    rep_coef: object = None   # start = rep_coef * rep

    def coef_of(self, w):
        """c with w = c * rep."""
        return _scalar_div(self.rep_coef, self.members[w])


def canonical_key(w):
    return (len(w), 0 if is_tableau_word(w) else 1, w)


def _pattern_index(pres):
    idx = pres.__dict__.get("_index")
    if idx is None:
        idx = {}
        for a, b, c in pres.rules:
            idx.setdefault(a, []).append((b, c, True))
            idx.setdefault(b, []).append((a, c, False))
        pres.__dict__["_index"] = idx
        pres.__dict__["_lengths"] = sorted({len(k) for k in idx})
    return idx, pres.__dict__["_lengths"]


def _neighbours(w, pres, bound):
    idx, lengths = _pattern_index(pres)
    n = len(w)
    for s in range(n):
        for L in lengths:
            if s + L > n:
                break
            hits = idx.get(w[s:s + L])
            if not hits:
                continue
            for dst, c, forward in hits:
                if n - L + len(dst) <= bound:
                    yield w[:s] + dst + w[s + L:], c, forward


def closure(w, pres, bound=None, limit=10 ** 6):
    """Equivalence class of w with scalar bookkeeping (BFS)."""
    w = tuple(w)
    if bound is None:
        bound = len(w)
    if bound > 14 and not pres.homogeneous:
        raise RewriteError("length bound %d exceeds 14" % bound)
    one = Fraction(1) if _numeric(pres) else ONE
    members = {w: one}
    queue = deque([w])
    zero = False
    conflicts = []
    while queue:
        v = queue.popleft()
        cv = members[v]
        if pres.is_zero_word(v):
            zero = True
        for u, c, forward in _neighbours(v, pres, bound):
            # v = c u (forward) or u = c v (backward)
            cu = _scalar_mul(cv, c) if forward else _scalar_div(cv, c)
            old = members.get(u)
            if old is None:
                members[u] = cu
                queue.append(u)
                if len(members) > limit:
                    raise RewriteError("class of %s exceeds %d words" % (P.word_str(w), limit))
            elif old != cu and len(conflicts) < 10:
                conflicts.append((u, old, cu))
    info = ClassInfo(w, members, zero, not conflicts, conflicts)
    info.rep = min(members, key=canonical_key)
    info.rep_coef = members[info.rep]
    return info


def _numeric(pres):
    for _, _, c in pres.rules:
        return isinstance(c, Fraction)
    return False


class Reducer:
    """Cached normal forms u_w = c u_rep (or zero) in a presentation."""

    def __init__(self, pres, bound=None):
        self.pres = pres
        self.bound = bound
        self.cache = {}
        self.nonflat = []

    def reduce(self, w):
        w = tuple(w)
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        name = self.pres.name
        if name == "P":
            out = (ONE, rsk_normal_form(w))
        elif name in ("NC", "IC"):
            out = self._coxeter(w)
        else:
            bound = max(len(w), self.bound or 0)
            info = closure(w, self.pres, bound)
            if not info.flat:
                self.nonflat.append(info)
            if info.zero or not info.flat:
                for m in info.members:
                    if len(m) == len(w) or self.pres.homogeneous:
                        self.cache[m] = (None, None)
                return (None, None)
            for m in info.members:
                if self.pres.homogeneous or len(m) == len(w):
                    self.cache[m] = (info.coef_of(m), info.rep)
            return self.cache[w]
        self.cache[w] = out
        return out

    def _coxeter(self, w):
        n = self.pres.n
        u = P.identity(n)
        k = 0
        for a in w:
            v = P.times_s(u, a)
            if P.length(v) > P.length(u):
                u = v
            else:
                k += 1
        if k and self.pres.name == "NC":
            return (None, None)
        beta = Poly.coerce(self.pres.params.get("beta", "beta"))
        if k and beta.is_zero():
            return (None, None)
        return (beta ** k, P.reduced_word(u))

    def __call__(self, w):
        return self.reduce(w)


# bulk operations -----------------------------------------------------------

def all_words(n, length):
    letters = range(1, n)
    out = [()]
    for _ in range(length):
        out = [w + (a,) for w in out for a in letters]
    return out


def knuth_class(w):
    return set(closure(tuple(w), preset("P", _alphabet(w))).members)


def graded_basis(pres, max_degree, bound=None):
    """Canonical representatives of the nonzero classes, by degree.

    Degree d+1 candidates are the products rep * u_j of degree-d
    representatives, so only reachable classes are visited.
    """
    red = Reducer(pres, bound)
    levels = [[()]]
    seen = {()}
    for d in range(1, max_degree + 1):
        new = []
        for r in levels[-1]:
            for a in pres.letters:
                c, rep = red.reduce(r + (a,))
                if rep is None or rep in seen:
                    continue
                seen.add(rep)
                new.append(rep)
        levels.append(sorted(new))
        if not new:
            break
    return levels, red


def hilbert_by_bfs(pres, max_degree, bound=None):
    """Graded dimension from the canonical representatives.

    For non-homogeneous presets the grading is the length of the shortest
    representative.
    """
    levels, red = graded_basis(pres, max_degree, bound)
    counts = {}
    for lvl in levels:
        for r in lvl:
            counts[len(r)] = counts.get(len(r), 0) + 1
    top = max(counts) if counts else 0
    hs = [counts.get(d, 0) for d in range(top + 1)]
    while len(hs) > 1 and hs[-1] == 0:
        hs.pop()
    return hs


def noncomm_elementary(n, pres, degree=6):
    """e_k(U) = sum over strictly decreasing words of length k; returns the
    nonzero commutators [e_i, e_j] (anticommutators for OPL) up to the
    degree bound."""
    red = Reducer(pres)
    e = {k: [tuple(sorted(c, reverse=True)) for c in combinations(range(1, n), k)]
         for k in range(1, n)}
    sign = -1 if pres.name == "OPL" else 1
    report = {}
    for i in range(1, n):
        for j in range(i + 1, n):
            if i + j > degree:
                continue
            acc = {}
            for a in e[i]:
                for b in e[j]:
                    for w, s in ((a + b, 1), (b + a, -sign)):
                        c, rep = red.reduce(w)
                        if rep is None:
                            continue
                        acc[rep] = acc.get(rep, 0) + s * c
            acc = {k: v for k, v in acc.items() if not (v == 0 or (isinstance(v, Poly) and v.is_zero()))}
            report[(i, j)] = acc
    return report


@lru_cache(maxsize=None)
def staircase_word(n):
    """I_0 = (n-1 ... 1)(n-1 ... 2) ... (n-1)."""
    out = []
    for k in range(1, n):
        out.extend(range(n - 1, k - 1, -1))
    return tuple(out)
