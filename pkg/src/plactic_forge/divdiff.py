"""The five-parameter operators T = a + (b x_i + c x_j + h + e x_i x_j) d_ij.

d_ij is the Newton divided difference in x_i, x_j; the polynomial factor
multiplies after d_ij is applied.  Words are applied with the leftmost
operator last: T_{i1} T_{i2} ... T_{il} f = T_{i1}(T_{i2}(...(f))).
"""
import random
from dataclasses import dataclass, field

from .poly import ONE, ZERO, Poly, X, divided_difference, parse, prod, var
from .perm import is_reduced


class OperatorError(ValueError):
    pass


def _p(v):
    return Poly.coerce(v)


@dataclass(frozen=True)
class OperatorSpec:
    a: Poly
    b: Poly
    c: Poly
    h: Poly
    e: Poly
    tag: str = field(default="", compare=False)

    @staticmethod
    def make(a, b, c, h, e, tag=""):
        return OperatorSpec(_p(a), _p(b), _p(c), _p(h), _p(e), tag)

    @staticmethod
    def parse(text, tag="cli"):
        vals = {"a": 0, "b": 0, "c": 0, "h": 0, "e": 0}
        for part in text.split(","):
            if not part.strip():
                continue
            key, _, val = part.partition("=")
            key = key.strip()
            if key not in vals or not val.strip():
                raise OperatorError("bad spec entry %r" % part)
            vals[key] = parse(val)
        return OperatorSpec.make(tag=tag, **vals)

    def astuple(self):
        return (self.a, self.b, self.c, self.h, self.e)

    def __str__(self):
        return "(%s)" % ", ".join(str(v) for v in self.astuple())

    @property
    def hecke_coefficients(self):
        """(s, t) with T^2 = s T + t."""
        a, b, c = self.a, self.b, self.c
        return 2 * a + b - c, -(a * (a + b - c))

    def coxeter_polynomial(self):
        a, b, c, h, e = self.astuple()
        return (a + b) * (a - c) + h * e


# the named specs
NEWTON = OperatorSpec.make(0, 0, 0, 1, 0, "newton")
KEY = OperatorSpec.make(1, 0, 1, 0, 0, "key")
REDUCED_KEY = OperatorSpec.make(0, 0, 1, 0, 0, "reduced_key")
DZ = OperatorSpec.make(-1, 2, 0, 1, 1, "dz")


def grothendieck_spec(beta="beta"):
    beta = _p(beta)
    return OperatorSpec.make(-beta, beta, 0, 1, 0, "grothendieck")


def dual_grothendieck_spec(beta="beta"):
    return OperatorSpec.make(0, _p(beta), 0, 1, 0, "dual_grothendieck")


def key_grothendieck_spec(beta="beta"):
    return OperatorSpec.make(1, 0, 1, 0, _p(beta), "key_grothendieck")


def reduced_key_grothendieck_spec(beta="beta"):
    return OperatorSpec.make(0, 0, 1, 0, _p(beta), "reduced_key_grothendieck")


def bott_samelson_spec(v="v"):
    # 1 + T = 1 + v + (x_{i+1} - v x_i) d_i, so that (1 + T)^2 = (1 + v)(1 + T)
    v = _p(v)
    return OperatorSpec.make(v, -v, 1, 0, 0, "bott_samelson")


def cherednik_spec(t="t"):
    t = _p(t)
    return OperatorSpec.make(t, -t, 1, 0, 0, "cherednik")


def apply_T(spec, i, f, j=None):
    if j is None:
        j = i + 1
    f = Poly.coerce(f)
    d = divided_difference(f, i, j)
    out = spec.a * f if spec.a else ZERO
    if d:
        xi, xj = X(i), X(j)
        factor = spec.b * xi + spec.c * xj + spec.h + spec.e * xi * xj
        out = out + factor * d
    return out


def apply_word_raw(spec, word, f):
    for i in reversed(tuple(word)):
        f = apply_T(spec, i, f)
    return f


def _test_polys(nvars, degree, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = ZERO
        for _ in range(4):
            exps = [0] * nvars
            for _ in range(rng.randint(0, degree)):
                exps[rng.randrange(nvars)] += 1
            mono = prod(X(k + 1) ** e for k, e in enumerate(exps) if e)
            p = p + rng.randint(-3, 3) * mono
        out.append(p)
    return out


def _braid_residuals(spec, polys):
    out = []
    for f in polys:
        r = apply_word_raw(spec, (1, 2, 1), f) - apply_word_raw(spec, (2, 1, 2), f)
        if r:
            out.append((f, r))
    return out


def coxeter_valid(spec, check=True):
    algebraic = spec.coxeter_polynomial().is_zero()
    if check:
        tests = [X(1) ** 2 * X(2)] + _test_polys(3, 3, 10, 7)
        symbolic = not _braid_residuals(spec, tests)
        if symbolic != algebraic:
            raise OperatorError("braid check disagrees with the parameter criterion for %s" % spec)
    return algebraic


def degree_basis(nvars, maxdeg):
    out = [ONE]
    monos = [()]
    for _ in range(maxdeg):
        monos = sorted({tuple(sorted(m + (k,))) for m in monos for k in range(1, nvars + 1)})
        out.extend(prod(X(k) for k in m) for m in monos)
    return out


def hecke_square_residual(spec, i=1, maxdeg=4, nvars=3):
    s, t = spec.hecke_coefficients
    worst = ZERO
    for f in degree_basis(nvars, maxdeg):
        tf = apply_T(spec, i, f)
        r = apply_T(spec, i, tf) - s * tf - t * f
        if r and (worst.is_zero() or len(r.terms) > len(worst.terms)):
            worst = r
    return worst


def apply_along_word(spec, word, f, check=True):
    word = tuple(word)
    if check and not coxeter_valid(spec, check=False):
        n = max(word, default=0) + 1
        if len(word) > 1 and is_reduced(word, n):
            raise OperatorError("spec %s fails the braid relation; word products are ambiguous" % spec)
    return apply_word_raw(spec, word, f)


def crossing_residual(spec, i=1, j=None, polys=None):
    """T x_i T - (he - bc) x_j - (h + (a+b)(x_i + x_j) + e x_i x_j) T on test inputs."""
    if j is None:
        j = i + 1
    a, b, c, h, e = spec.astuple()
    xi, xj = X(i), X(j)
    g = h + (a + b) * (xi + xj) + e * xi * xj
    polys = polys or degree_basis(3, 3)
    for f in polys:
        lhs = apply_T(spec, i, xi * apply_T(spec, i, f, j), j)
        rhs = (h * e - b * c) * xj * f + g * apply_T(spec, i, f, j)
        if lhs != rhs:
            return lhs - rhs
    return ZERO


def _apply_seq(ops, f):
    for op in reversed(ops):
        f = op(f)
    return f


def yang_baxter_checks(spec, spectral=("lam", "mu", "nu"), polys=None):
    polys = polys or ([X(1) ** 2 * X(2), X(1) * X(3) ** 2 + X(2)] + _test_polys(3, 3, 4, 11))

    def T(i, j):
        return lambda f: apply_T(spec, i, f, j)

    plain = ZERO
    for f in polys:
        r = _apply_seq([T(1, 2), T(1, 3), T(2, 3)], f) - _apply_seq([T(2, 3), T(1, 3), T(1, 2)], f)
        if r:
            plain = r
            break
    b_e_zero = spec.b.is_zero() and spec.c.is_zero() and spec.e.is_zero()

    beta, _ = spec.hecke_coefficients
    lam, mu, nu = (_p(v) for v in spectral)
    twisted = None
    if not beta.is_zero():
        if mu.is_zero() or nu.is_zero():
            raise OperatorError("zero denominator in the spectral twist")

        def R(i, j, l, m):
            # beta*m * R_ij(l, m); the denominators agree on both sides
            return lambda f: beta * m * f + (l - m) * apply_T(spec, i, f, j)

        twisted = ZERO
        for f in polys[:3]:
            lhs = _apply_seq([R(1, 2, lam, mu), R(2, 3, lam, nu), R(1, 2, mu, nu)], f)
            rhs = _apply_seq([R(2, 3, mu, nu), R(1, 2, lam, nu), R(2, 3, lam, mu)], f)
            if lhs != rhs:
                twisted = lhs - rhs
                break
    return {
        "plain_residual": plain,
        "plain_vanishes": plain.is_zero(),
        "b_c_e_zero": b_e_zero,
        "plain_matches_criterion": plain.is_zero() == b_e_zero,
        "twisted_residual": twisted,
        "twisted_vanishes": None if twisted is None else twisted.is_zero(),
    }


# affine pieces -------------------------------------------------------------

def pi_shift(f, n):
    """Affine shift: x_i -> x_{i+1} for i < n and x_n -> x_1 / q."""
    q = var("q")
    assign = {"x%d" % k: X(k + 1) for k in range(1, n)}
    assign["x%d" % n] = X(1) * q.inverse()
    return f.subs(assign)


def pi_shift_inverse(f, n):
    q = var("q")
    assign = {"x%d" % k: X(k - 1) for k in range(2, n + 1)}
    assign["x1"] = X(n) * q
    return f.subs(assign)


def apply_T_inverse(spec, i, f):
    s, t = spec.hecke_coefficients
    if not t.is_unit() and not (t.is_constant() and abs(t.constant()) == 1):
        raise OperatorError("T is not invertible for %s" % spec)
    tinv = t.inverse() if not t.is_constant() else Poly.const(t.constant())
    # T^2 = sT + t  =>  T^{-1} = t^{-1}(T - s)
    return tinv * (apply_T(spec, i, f) - s * f)


def cherednik_Y(i, f, n, spec=None, literal=False):
    """Y_i = T_{i-1}^{-1} ... T_1^{-1} pi T_{n-1} ... T_i applied to f.

    With literal=True the right-hand product stops at T_{i+1}, which is the
    form that does not commute (kept for the report).
    """
    spec = spec or cherednik_spec()
    for a in range(i + 1 if literal else i, n):
        f = apply_T(spec, a, f)
    f = pi_shift(f, n)
    for a in range(1, i):
        f = apply_T_inverse(spec, a, f)
    return f


def dunkl_cherednik_commutativity(n, maxdeg=3, spec=None, literal=False):
    spec = spec or cherednik_spec()
    report = {}
    basis = degree_basis(n, maxdeg)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            worst = ZERO
            for f in basis:
                r = cherednik_Y(i, cherednik_Y(j, f, n, spec, literal), n, spec, literal) - \
                    cherednik_Y(j, cherednik_Y(i, f, n, spec, literal), n, spec, literal)
                if r:
                    worst = r
                    break
            report[(i, j)] = worst
    return report


def battery():
    """Coxeter-valid specs used by the property suites."""
    return [
        NEWTON, KEY, REDUCED_KEY, DZ,
        grothendieck_spec(), dual_grothendieck_spec(),
        key_grothendieck_spec(), reduced_key_grothendieck_spec(),
        bott_samelson_spec(), cherednik_spec(),
        OperatorSpec.make("-beta", "alpha+beta", 0, 1, "alpha*beta", "kn"),
        OperatorSpec.make("-alpha", "alpha+beta", 0, 1, "alpha*beta", "kn_swapped"),
        OperatorSpec.make(1, -1, 1, "h", 0, "h_schubert"),
    ]

