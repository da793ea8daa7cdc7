"""Permutations in one-line notation (tuples of 1..n), words and codes.

Products compose right to left: (u*v)(i) = u(v(i)).  A word a1 a2 ... al
stands for s_{a1} s_{a2} ... s_{al}.
"""
from functools import lru_cache
from itertools import permutations


class PermError(ValueError):
    pass


def perm(seq):
    w = tuple(int(c) for c in seq)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PermError("not a permutation: %r" % (seq,))
    return w


def parse_perm(s):
    s = s.strip().strip("[]()")
    parts = s.split(",") if "," in s else list(s)
    return perm(p for p in parts if p.strip())


def parse_word(s):
    s = s.strip()
    if s in ("", "-", "id", "e"):
        return ()
    parts = s.split(",") if "," in s else list(s)
    return tuple(int(p) for p in parts if p.strip())


def word_str(word):
    if any(a > 9 for a in word):
        return ",".join(map(str, word))
    return "".join(map(str, word))


def perm_str(w):
    return "".join(map(str, w)) if len(w) < 10 else "[" + ",".join(map(str, w)) + "]"


def identity(n):
    return tuple(range(1, n + 1))


def longest(n):
    return tuple(range(n, 0, -1))


def compose(u, v):
    return tuple(u[v[i] - 1] for i in range(len(u)))


def inverse(w):
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi - 1] = i + 1
    return tuple(out)


def times_s(w, i):
    """w * s_i: swap positions i and i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def s_times(i, w):
    """s_i * w: swap the values i and i+1."""
    return tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)


def length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inversions(w):
    n = len(w)
    return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]]


def right_descents(w):
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def left_descents(w):
    return right_descents(inverse(w))


def from_word(word, n):
    w = identity(n)
    for a in word:
        if not 1 <= a < n:
            raise PermError("letter %d out of range for S_%d" % (a, n))
        w = times_s(w, a)
    return w


def is_reduced(word, n):
    return length(from_word(word, n)) == len(word)


def reduced_word(w):
    """Lexicographically smallest reduced word."""
    out = []
    while True:
        d = left_descents(w)
        if not d:
            return tuple(out)
        out.append(d[0])
        w = s_times(d[0], w)


@lru_cache(maxsize=None)
def _all_words(w):
    if length(w) == 0:
        return frozenset([()])
    out = set()
    for i in left_descents(w):
        for rest in _all_words(s_times(i, w)):
            out.add((i,) + rest)
    return frozenset(out)


def reduced_words(w, mode="all"):
    if mode == "one":
        return [reduced_word(w)]
    if length(w) > 12:
        raise PermError("too long for full enumeration")
    return sorted(_all_words(tuple(w)))


def lehmer_code(w):
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def code_to_perm(code, n=None):
    code = list(code)
    if n is None:
        n = len(code)
    code = code + [0] * (n - len(code))
    if len(code) > n:
        if any(code[n:]):
            raise PermError("code longer than n")
        code = code[:n]
    avail = list(range(1, n + 1))
    out = []
    for i, c in enumerate(code):
        if c > n - 1 - i or c < 0:
            raise PermError("code %r is not below the staircase" % (tuple(code),))
        out.append(avail.pop(c))
    return tuple(out)


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _lower_interval(w):
    # permutations given by reduced subwords of one reduced word of w
    reach = {identity(len(w))}
    for a in reduced_word(w):
        new = set(reach)
        for u in reach:
            v = times_s(u, a)
            if length(v) == length(u) + 1:
                new.add(v)
        reach = new
    return frozenset(reach)


def bruhat_leq(v, w):
    if len(v) != len(w):
        raise PermError("different sizes")
    return tuple(v) in _lower_interval(tuple(w))


def is_partition(alpha):
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def in_staircase(alpha, n):
    return len(alpha) <= n and all(a <= n - 1 - i for i, a in enumerate(alpha))


def act(w, alpha):
    """(w.alpha)_j = alpha_{w(j)}."""
    return tuple(alpha[w[j] - 1] for j in range(len(alpha)))


def sorting_word(alpha):
    """Word i1..il with alpha -> s_{i1} alpha -> ... reaching the sorted partition.

    Each step swaps a strict ascent (the smallest one), so
    K[alpha] = pi_{i1} ... pi_{il} x^{alpha+} with the leftmost applied last.
    """
    alpha = list(alpha)
    word = []
    while True:
        for i in range(len(alpha) - 1):
            if alpha[i] < alpha[i + 1]:
                alpha[i], alpha[i + 1] = alpha[i + 1], alpha[i]
                word.append(i + 1)
                break
        else:
            return tuple(word)


def sort_composition(alpha):
    alpha = tuple(alpha)
    plus = tuple(sorted(alpha, reverse=True))
    w = from_word(sorting_word(alpha), max(len(alpha), 1))
    return plus, w


def swap_comp(alpha, i):
    a = list(alpha)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def compositions_in_staircase(n):
    out = [()]
    for i in range(n):
        out = [c + (k,) for c in out for k in range(n - i)]
    return out
