"""Exact sparse multivariate polynomials with integer coefficients.

Variables are plain strings: ``x1, x2, ...`` and ``y1, y2, ...`` for the two
alphabets, and named parameters (``beta``, ``alpha``, ``p1_3``, ``q2_3`` ...).
Parameters may carry negative exponents, x/y variables may not.
"""
import json
import re
from functools import lru_cache

PARAM_NAMES = {"beta", "alpha", "gamma", "h", "a", "b", "c", "d", "e", "r",
               "t", "q", "v", "eta", "xi", "lam", "mu", "nu", "k"}
_INDEXED_PARAM = re.compile(r"^([pq])(\d+)_(\d+)$")
_ALPHABET = re.compile(r"^([xyz])(\d+)$")


class PolyError(ValueError):
    pass


def register_param(name):
    if not re.match(r"^[A-Za-z][A-Za-z]*$", name):
        raise PolyError("bad parameter name %r" % name)
    PARAM_NAMES.add(name)


@lru_cache(maxsize=None)
def var_key(name):
    m = _ALPHABET.match(name)
    if m:
        i = int(m.group(2))
        if i < 1:
            raise PolyError("variable index must be >= 1: %r" % name)
        return (" xyz".index(m.group(1)) - 1, i, "", 0)
    m = _INDEXED_PARAM.match(name)
    if m:
        return (3, 0, m.group(1), int(m.group(2)) * 1000 + int(m.group(3)))
    if name in PARAM_NAMES:
        return (3, 0, name, 0)
    raise PolyError("unknown variable %r" % name)


def is_param(name):
    return var_key(name)[0] == 3


def _mono(pairs):
    # pairs: iterable of (name, exp); merges, drops zeros, sorts
    acc = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda t: var_key(t[0])))


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    return _mono(m1 + m2)


_END = (9,)


def _order_key(m):
    deg = sum(e for _, e in m)
    return (-deg, tuple((var_key(v), -e) for v, e in m) + (_END,))


class Poly:
    """Immutable polynomial: mapping monomial -> nonzero int."""
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {m: c for m, c in terms.items() if c}
        self._hash = None

    # construction
    @staticmethod
    def const(c):
        return Poly({(): int(c)}) if c else Poly()

    @staticmethod
    def var(name, exp=1):
        var_key(name)
        if exp < 0 and not is_param(name):
            raise PolyError("negative exponent on %s" % name)
        return Poly({((name, exp),): 1}) if exp else Poly.const(1)

    @staticmethod
    def monomial(exps, coef=1):
        items = exps.items() if isinstance(exps, dict) else exps
        for v, e in items:
            var_key(v)
            if e < 0 and not is_param(v):
                raise PolyError("negative exponent on %s" % v)
        return Poly({_mono(items): coef})

    @staticmethod
    def coerce(p):
        if isinstance(p, Poly):
            return p
        if isinstance(p, int):
            return Poly.const(p)
        if isinstance(p, str):
            return parse(p)
        raise TypeError("cannot make a polynomial from %r" % (p,))

    # arithmetic
    def __add__(self, other):
        other = Poly.coerce(other)
        if not other.terms:
            return self
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        other = Poly.coerce(other)
        if not self.terms or not other.terms:
            return Poly()
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Poly(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_unit(self):
        if len(self.terms) != 1:
            return False
        (m, c), = self.terms.items()
        return c in (1, -1) and all(is_param(v) for v, _ in m)

    def inverse(self):
        if not self.is_unit():
            raise PolyError("%s is not invertible" % self)
        (m, c), = self.terms.items()
        return Poly({tuple((v, -e) for v, e in m): c})

    def scale(self, c):
        return Poly({m: c * k for m, k in self.terms.items()})

    # comparisons
    def __eq__(self, other):
        if isinstance(other, (int, str)):
            other = Poly.coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or list(self.terms) == [()]

    def constant(self):
        return self.terms.get((), 0)

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m}, key=var_key)

    def degree(self, names=None):
        if not self.terms:
            return -1
        if names is None:
            return max(sum(e for _, e in m) for m in self.terms)
        names = set(names)
        return max(sum(e for v, e in m if v in names) for m in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _order_key(mc[0]))

    def exponent(self, m, name):
        for v, e in m:
            if v == name:
                return e
        return 0

    def coefficients(self, names):
        """Split into {monomial in `names`: coefficient poly in the other variables}."""
        names = set(names)
        out = {}
        for m, c in self.terms.items():
            inner = tuple(p for p in m if p[0] in names)
            outer = tuple(p for p in m if p[0] not in names)
            out.setdefault(inner, {})[outer] = c
        return {k: Poly(v) for k, v in out.items()}

    def nonnegative(self):
        return all(c > 0 for c in self.terms.values())

    def __repr__(self):
        return "Poly(%r)" % str(self)

    def __str__(self):
        return to_text(self)

    # substitutions
    def subs(self, assignment):
        return specialize(self, assignment)

    def swap(self, a, b):
        return self.rename({a: b, b: a})

    def rename(self, mapping):
        t = {}
        for m, c in self.terms.items():
            mm = _mono((mapping.get(v, v), e) for v, e in m)
            t[mm] = t.get(mm, 0) + c
        return Poly(t)

    def evaluate_all(self, value=1):
        """Set every x/y variable to `value` (params stay)."""
        names = [v for v in self.variables() if not is_param(v)]
        return specialize(self, {v: value for v in names})


ZERO = Poly()
ONE = Poly.const(1)


def X(i):
    return Poly.var("x%d" % i)


def Y(j):
    return Poly.var("y%d" % j)


def pvar(i, j):
    return Poly.var("p%d_%d" % (i, j))


def var(name):
    return Poly.var(name)


def specialize(p, assignment):
    if not assignment:
        return p
    vals = {k: Poly.coerce(v) for k, v in assignment.items()}
    cache = {}

    def power(v, e):
        key = (v, e)
        if key not in cache:
            base = vals[v]
            if e < 0 and not base.is_unit():
                raise PolyError("cannot substitute non-unit %s into %s^%d" % (base, v, e))
            cache[key] = base ** e
        return cache[key]

    out = {}
    for m, c in p.terms.items():
        rest = []
        factor = None
        for v, e in m:
            if v in vals:
                f = power(v, e)
                factor = f if factor is None else factor * f
            else:
                rest.append((v, e))
        if factor is None:
            mm = tuple(rest)
            out[mm] = out.get(mm, 0) + c
            continue
        base = Poly({tuple(rest): c})
        for mm, cc in (base * factor).terms.items():
            out[mm] = out.get(mm, 0) + cc
    return Poly(out)


# divided differences -----------------------------------------------------

def _dd_pair(a, b):
    # (u^a w^b - u^b w^a) / (u - w) as list of (sign, exp_u, exp_w)
    if a == b:
        return []
    sign = 1 if a > b else -1
    lo, hi = min(a, b), max(a, b)
    return [(sign, hi - 1 - k, lo + k) for k in range(hi - lo)]


def divided_difference_vars(f, u, w):
    """(f - f|_{u<->w}) / (u - w) for two variables u, w."""
    out = {}
    for m, c in f.terms.items():
        a = b = 0
        rest = []
        for v, e in m:
            if v == u:
                a = e
            elif v == w:
                b = e
            else:
                rest.append((v, e))
        if (a < 0 or b < 0):
            raise PolyError("divided difference on negative exponent")
        for s, eu, ew in _dd_pair(a, b):
            mm = _mono(rest + [(u, eu), (w, ew)])
            out[mm] = out.get(mm, 0) + s * c
    return Poly(out)


def divided_difference(f, i, j=None, alphabet="x"):
    """Newton divided difference in x_i, x_j (default j = i + 1)."""
    if j is None:
        j = i + 1
    if i < 1 or j < 1:
        raise PolyError("indices must be >= 1")
    return divided_difference_vars(f, "%s%d" % (alphabet, i), "%s%d" % (alphabet, j))


def isobaric_pi(f, i, reduced=False):
    g = divided_difference(X(i) * f, i)
    return g - f if reduced else g


def generalized_dd(f, x, y, eta=1, additive=None):
    """Divided difference with a multiplicative twist (eta) or additive shift k.

    multiplicative: (f(x,y) - f(y/eta, eta*x)) / (x - y/eta)
    additive:       (f(x,y) - f(y-k, x+k)) / (x - y + k)
    """
    if additive is not None:
        k = Poly.coerce(additive)
        g = specialize(f, {y: Poly.var(y) + k})
        return specialize(divided_difference_vars(g, x, y), {y: Poly.var(y) - k})
    eta = Poly.coerce(eta)
    if not eta.is_unit():
        raise PolyError("twist %s is not a unit" % eta)
    einv = eta.inverse()
    out = ZERO
    # write y = eta * Y', so f(x, eta Y') is symmetric-difference in (x, Y')
    for m, c in f.terms.items():
        a = b = 0
        rest = []
        for v, e in m:
            if v == x:
                a = e
            elif v == y:
                b = e
            else:
                rest.append((v, e))
        coef = Poly({tuple(rest): c}) * eta ** b
        for s, ex, ey in _dd_pair(a, b):
            out = out + coef * Poly.monomial({x: ex, y: ey}) * einv ** ey * s
    return out


# text / json ---------------------------------------------------------------

def _mono_text(m):
    parts = []
    for v, e in m:
        parts.append(v if e == 1 else "%s^%d" % (v, e))
    return "*".join(parts)


def to_text(p):
    if not p.terms:
        return "0"
    out = []
    for m, c in p.sorted_terms():
        mt = _mono_text(m)
        mag = abs(c)
        if not mt:
            body = str(mag)
        elif mag == 1:
            body = mt
        else:
            body = "%d*%s" % (mag, mt)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def to_json_obj(p):
    return [{"coef": str(c), "exps": dict(m)} for m, c in p.sorted_terms()]


def to_json(p):
    return json.dumps(to_json_obj(p), sort_keys=False)


def from_json(s):
    data = json.loads(s) if isinstance(s, str) else s
    out = ZERO
    for t in data:
        out = out + Poly.monomial(t["exps"], int(t["coef"]))
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokens(s):
    pos = 0
    toks = []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1):
            toks.append(("num", int(m.group(1))))
        elif m.group(2):
            toks.append(("name", m.group(2)))
        elif m.group(3) and not m.group(3).isspace():
            toks.append(("op", m.group(3)))
    return toks


class _Parser:
    def __init__(self, s):
        self.toks = _tokens(s)
        self.i = 0
        self.src = s

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise PolyError("expected %r in %r" % (op, self.src))

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, val = self.take()
            if kind != "num":
                raise PolyError("bad exponent in %r" % self.src)
            return base ** (-val if neg else val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "name":
            try:
                return Poly.var(val)
            except PolyError:
                raise PolyError("unknown variable %r in %r" % (val, self.src))
        if (kind, val) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        raise PolyError("unexpected token %r in %r" % (val, self.src))


def parse(s):
    p = _Parser(s)
    if not p.toks:
        raise PolyError("empty polynomial")
    out = p.expr()
    if p.i != len(p.toks):
        raise PolyError("trailing input in %r" % s)
    return out


def prod(items):
    out = ONE
    for it in items:
        out = out * it
    return out


def staircase_product(n, double=True):
    """prod over i + j <= n of (x_i + y_j); with double=False just x^delta."""
    out = ONE
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out = out * (X(i) + Y(j) if double else X(i))
    return out


def x_power(exps):
    return Poly.monomial({"x%d" % (i + 1): e for i, e in enumerate(exps) if e})


def exponent_vector(m, n, alphabet="x"):
    vec = [0] * n
    for v, e in m:
        mm = _ALPHABET.match(v)
        if mm and mm.group(1) == alphabet:
            i = int(mm.group(2))
            if i <= n:
                vec[i - 1] = e
    return tuple(vec)


def expand_in_family(p, basis, n, max_steps=10000):
    """Write p as a combination of basis(alpha), alpha a composition of length n.

    The basis has to be unitriangular: the lowest-degree part of basis(alpha)
    has x^alpha as its lex-smallest monomial with coefficient 1.  Returns
    ({alpha: coefficient in the parameters}, all_coefficients_nonnegative).
    """
    xs = ["x%d" % i for i in range(1, n + 1)]
    res = p
    out = {}
    for _ in range(max_steps):
        if res.is_zero():
            break
        split = res.coefficients(xs)
        deg = min(sum(e for _, e in m) for m in split)
        low = [m for m in split if sum(e for _, e in m) == deg]
        m = min(low, key=lambda mm: tuple(-e for e in exponent_vector(mm, n)))
        alpha = exponent_vector(m, n)
        b = basis(alpha)
        if b is None:
            raise PolyError("no basis element for %s; residual %s" % (alpha, res))
        c = split[m]
        out[alpha] = out.get(alpha, ZERO) + c
        res = res - c * b
    else:
        raise PolyError("expansion did not terminate; residual %s" % res)
    out = {k: v for k, v in out.items() if not v.is_zero()}
    return out, all(v.nonnegative() for v in out.values())
