"""Monotone triangles and the lattice they form under entrywise min and max.

A triangle for S_n is stored as rows 1..n-1, row i holding n - i strictly
increasing entries from [1, n]; the implicit row 0 is (1, ..., n).  Rows
interlace: T[i][j] <= T[i+1][j] <= T[i][j+1].  Permutation w gives the
triangle whose row i is the sorted prefix w_1..w_{n-i}.
"""
import random
from math import comb

from . import perm as P


class LatticeError(ValueError):
    pass


MAX_N = 6


def triangle_of(w):
    w = tuple(w)
    n = len(w)
    return tuple(tuple(sorted(w[:n - i])) for i in range(1, n))


def is_monotone(t, n):
    if len(t) != max(n - 1, 0):
        return False
    prev = tuple(range(1, n + 1))
    for i, row in enumerate(t, 1):
        if len(row) != n - i:
            return False
        if any(not 1 <= v <= n for v in row):
            return False
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
        if any(not prev[j] <= row[j] <= prev[j + 1] for j in range(len(row))):
            return False
        prev = row
    return True


def meet(a, b):
    return tuple(tuple(min(x, y) for x, y in zip(r, s)) for r, s in zip(a, b))


def join(a, b):
    return tuple(tuple(max(x, y) for x, y in zip(r, s)) for r, s in zip(a, b))


def meet_join(a, b, n=None):
    out = meet(a, b), join(a, b)
    if n is not None:
        for t in out:
            if not is_monotone(t, n):
                raise LatticeError("meet/join left the monotone triangles: %r" % (t,))
    return out


def leq(a, b):
    return all(x <= y for r, s in zip(a, b) for x, y in zip(r, s))


def _check_n(n):
    if not 1 <= n <= MAX_N:
        raise LatticeError("lattice computations are bounded by 1 <= n <= %d" % MAX_N)


def all_triangles(n):
    """Every monotone triangle, enumerated row by row in lexicographic order."""
    _check_n(n)
    out = []

    def rec(prev, acc):
        k = len(prev) - 1
        if k == 0:
            out.append(tuple(acc))
            return
        for row in _interlacing(prev):
            acc.append(row)
            rec(row, acc)
            acc.pop()
    rec(tuple(range(1, n + 1)), [])
    return out


def _interlacing(prev):
    """Strictly increasing rows r of length len(prev) - 1 with
    prev[j] <= r[j] <= prev[j + 1]."""
    m = len(prev) - 1
    out = []

    def rec(j, acc):
        if j == m:
            out.append(tuple(acc))
            return
        lo = prev[j] if not acc else max(prev[j], acc[-1] + 1)
        for v in range(lo, prev[j + 1] + 1):
            acc.append(v)
            rec(j + 1, acc)
            acc.pop()
    rec(0, [])
    return out


def join_closure(n):
    """Close the permutation triangles under join."""
    _check_n(n)
    seen = {triangle_of(w) for w in P.all_perms(n)}
    frontier = list(seen)
    while frontier:
        new = []
        base = list(seen)
        for a in frontier:
            for b in base:
                c = join(a, b)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return sorted(seen)


def rank(t, n):
    """Sum of entries minus that of the bottom triangle, C(n+1, 3)."""
    return sum(sum(r) for r in t) - comb(n + 1, 3)


def correction(w):
    return sum(j - i - 1 for i, j in P.inversions(w))


def ehresmann_and_length(v, w):
    """(T(v) <= T(w) entrywise, rank(T(w)) - sum over inversions (j - i - 1))."""
    if len(v) != len(w):
        raise LatticeError("permutations of different sizes")
    n = len(w)
    tw = triangle_of(w)
    return leq(triangle_of(v), tw), rank(tw, n) - correction(w)


def length_example(w=(4, 6, 2, 7, 5, 1, 3)):
    n = len(w)
    t = triangle_of(w)
    return {"triangle": t, "rank": rank(t, n), "correction": correction(w),
            "length": rank(t, n) - correction(w), "inversions": P.length(w)}


def _poly(ranks):
    if not ranks:
        return []
    out = [0] * (max(ranks) + 1)
    for r in ranks:
        out[r] += 1
    return out


def rank_polynomials(n):
    """(rank distribution over all triangles, over permutation triangles)."""
    _check_n(n)
    r_all = _poly([rank(t, n) for t in all_triangles(n)])
    r_perm = _poly([rank(triangle_of(w), n) for w in P.all_perms(n)])
    r_perm += [0] * (len(r_all) - len(r_perm))
    return r_all, r_perm


class Lattice:
    def __init__(self, n):
        _check_n(n)
        self.n = n
        self.vertices = all_triangles(n)
        self.index = {t: i for i, t in enumerate(self.vertices)}
        self.ranks = [rank(t, n) for t in self.vertices]
        self._covers = None

    def __len__(self):
        return len(self.vertices)

    def covers(self):
        """(i, j) with vertex i covered by vertex j.

        Entries move by 1 between covering triangles, so a cover is a
        comparable pair whose rank differs by one.
        """
        if self._covers is None:
            out = []
            for i, t in enumerate(self.vertices):
                for row_i, row in enumerate(t):
                    for j in range(len(row)):
                        rows = [list(r) for r in t]
                        rows[row_i][j] += 1
                        u = tuple(tuple(r) for r in rows)
                        k = self.index.get(u)
                        if k is not None:
                            out.append((i, k))
            self._covers = sorted(out)
        return self._covers

    def bottom(self):
        return self.vertices[self.ranks.index(min(self.ranks))]

    def top(self):
        return self.vertices[self.ranks.index(max(self.ranks))]

    def permutation_of(self, t):
        """w with T(w) = t, or None."""
        n = self.n
        full = list(range(1, n + 1))
        rows = [tuple(full)] + list(t) + [()]
        w = []
        for a, b in zip(rows, rows[1:]):
            d = set(a) - set(b)
            if len(d) != 1:
                return None
            w.append(d.pop())
        w = tuple(reversed(w))
        return w if triangle_of(w) == t else None


def macneille(n):
    return Lattice(n)


def to_dot(lat):
    lines = ["digraph MN%d {" % lat.n, "  rankdir=BT;"]
    for i, t in enumerate(lat.vertices):
        w = lat.permutation_of(t)
        label = "/".join("".join(str(v) for v in r) for r in t) or "e"
        shape = "box" if w is not None else "ellipse"
        lines.append('  v%d [label="%s", shape=%s];' % (i, label, shape))
    for i, j in lat.covers():
        lines.append("  v%d -> v%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"


def distributivity_check(n, trials=100, seed=0):
    rng = random.Random(seed)
    verts = all_triangles(n)
    bad = []
    for _ in range(trials):
        a, b, c = (rng.choice(verts) for _ in range(3))
        if join(a, meet(b, c)) != meet(join(a, b), join(a, c)):
            bad.append((a, b, c))
        if meet(a, join(b, c)) != join(meet(a, b), meet(a, c)):
            bad.append((a, b, c))
    return bad


def ehresmann_matches_bruhat(n):
    """Pairs where the entrywise order and the subword Bruhat order disagree."""
    perms = P.all_perms(n)
    tri = {w: triangle_of(w) for w in perms}
    bad = []
    for v in perms:
        for w in perms:
            if leq(tri[v], tri[w]) != P.bruhat_leq(v, w):
                bad.append((v, w))
    return bad


def length_formula_failures(n):
    return [w for w in P.all_perms(n) if ehresmann_and_length(w, w)[1] != P.length(w)]


def middle_coefficient_probe(n):
    """Middle rank count and whether it divides |MN_n| (reported only)."""
    r, _ = rank_polynomials(n)
    size = sum(r)
    mid = r[(len(r) - 1) // 2]
    return {"n": n, "middle": mid, "size": size, "divides": size % mid == 0}
