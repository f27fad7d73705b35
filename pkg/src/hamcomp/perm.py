"""Symmetric Hamilton cycles in permutahedra."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .graphs import PermAutomorphism, Permutahedron, PermutahedronPlus
from .landau import landau0, landau2
from .verify import HamCycle, _Budget, hamilton_path_search, lift_path, rotation_search

SEARCH_BUDGET = 10**8


@dataclass(frozen=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if not parts or any(a < 1 for a in parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.parts)

    def blocks(self) -> list:
        out, b = [], 0
        for a in self.parts:
            out.append(tuple(range(b + 1, b + a + 1)))
            b += a
        return out

    def identity_word(self) -> tuple:
        """ide(a) = 1^{a_1} 2^{a_2} ... m^{a_m}."""
        return tuple(i + 1 for i, a in enumerate(self.parts) for _ in range(a))

    def split(self, x) -> tuple:
        """The per-block tuples y with x = ide(a) mix y."""
        out, b = [], 0
        for a in self.parts:
            out.append(tuple(x[b:b + a]))
            b += a
        return tuple(out)


def _comp(a) -> Composition:
    return a if isinstance(a, Composition) else Composition(tuple(a))


def parity(x) -> int:
    """0 for even permutations, 1 for odd (any sequence of distinct values)."""
    inv = sum(1 for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] > x[j])
    return inv % 2


def sjt(n: int) -> HamCycle:
    """The Steinhaus-Johnson-Trotter cycle of the permutahedron."""
    if n < 3:
        raise ValueError("sjt needs n >= 3")
    seq = [(1,)]
    for m in range(2, n + 1):
        nxt = []
        for i, p in enumerate(seq):
            spots = range(m - 1, -1, -1) if i % 2 == 0 else range(m)
            nxt.extend(p[:j] + (m,) + p[j:] for j in spots)
        seq = nxt
    return HamCycle.from_words(Permutahedron(n), seq, construction="sjt", params={"n": n})


def mix(u, xs) -> tuple:
    """Replace the j-th occurrence of value i in u by xs[i-1][j]."""
    xs = [tuple(x) for x in xs]
    counts = [0] * len(xs)
    out = []
    for s in u:
        if not 1 <= s <= len(xs):
            raise ValueError(f"symbol {s} has no block")
        j = counts[s - 1]
        if j >= len(xs[s - 1]):
            raise ValueError(f"block {s} has {len(xs[s - 1])} entries but u uses more")
        out.append(xs[s - 1][j])
        counts[s - 1] += 1
    if counts != [len(x) for x in xs]:
        raise ValueError("block sizes do not match the symbol frequencies of u")
    if len(set(out)) != len(out):
        raise ValueError("blocks are not disjoint")
    return tuple(out)


# ---------------------------------------------------------------------------
# Hamilton paths in permutahedra of small ordered sets


@lru_cache(maxsize=None)
def _perm_tables(m: int):
    g = Permutahedron(m)
    words = g.all_words()
    nb = [sorted(int(v) for v in row) for row in g.neighbor_indices(words)]
    return g, [tuple(int(v) for v in w) for w in words], nb


@lru_cache(maxsize=None)
def _lace_from_identity(m: int, end: tuple, budget: int) -> tuple | None:
    g, words, nb = _perm_tables(m)
    if m <= 4:
        path = hamilton_path_search(nb, 0, g.index(end), _Budget(budget, None))
    else:
        # plain DFS stalls on some endpoint pairs here; Posa rotations do not
        path = rotation_search(nb, 0, g.index(end), budget=_Budget(budget, None))
    if path is None:
        return None
    return tuple(words[i] for i in path)


def _lace_search(x, y, budget):
    m = len(x)
    rank = {v: i + 1 for i, v in enumerate(sorted(x))}
    xr = tuple(rank[v] for v in x)
    yr = tuple(rank[v] for v in y)
    # relabel values so that the path starts at the identity
    where = {v: i + 1 for i, v in enumerate(xr)}
    end = tuple(where[v] for v in yr)
    base = _lace_from_identity(m, end, budget)
    if base is None:
        raise RuntimeError(f"no Hamilton path in the permutahedron on {m} symbols to {end}")
    back = {i + 1: x[i] for i in range(m)}
    return [tuple(back[v] for v in w) for w in base]


def _exit_word(rest, second, last, avoid_parity):
    w = tuple(sorted(rest)) + (second, last)
    if parity(w) == avoid_parity:
        w = (w[1], w[0]) + w[2:]
    return w


def _lace(x, y, budget):
    m = len(x)
    if m <= 4:
        return _lace_search(x, y, budget)
    if x[-1] == y[-1]:
        if x[0] != y[0]:
            return [w[::-1] for w in _lace(x[::-1], y[::-1], budget)]
        return _lace_search(x, y, budget)
    # blocks by last value: a = x[-1], ..., b = y[-1], each a copy on m-1 symbols
    a, b = x[-1], y[-1]
    middle = sorted(v for v in x if v not in (a, b))
    for order in itertools.permutations(middle):
        if order[0] != x[-2] and order[-1] != y[-2]:
            break
    seq = (a,) + order + (b,)
    out = []
    s = x
    for t in range(m - 1):
        cur, nxt = seq[t], seq[t + 1]
        e = _exit_word([v for v in x if v not in (cur, nxt)], nxt, cur, parity(s))
        out.extend(w + (cur,) for w in _lace(s[:-1], e[:-1], budget))
        s = e[:-2] + (e[-1], e[-2])
    out.extend(w + (b,) for w in _lace(s[:-1], y[:-1], budget))
    return out


def lace_path(X, x, y, budget: int = SEARCH_BUDGET) -> list:
    """A Hamilton path of the permutahedron on the ordered set X from x to y."""
    X = tuple(X)
    x, y = tuple(x), tuple(y)
    m = len(X)
    if sorted(x) != sorted(X) or sorted(y) != sorted(X):
        raise ValueError("x and y must be permutations of X")
    if m == 1:
        return [x]
    if parity(x) == parity(y):
        raise ValueError("x and y must have opposite parity")
    if m == 3 and not _adjacent(x, y):
        raise ValueError("on three symbols the endpoints must differ by an adjacent transposition")
    return _lace(x, y, budget)


# ---------------------------------------------------------------------------
# multiset permutations


def multiset_perms(a) -> list:
    """All words with a_i copies of symbol i, in lex order."""
    a = _comp(a)
    counts = list(a.parts)
    out = []
    cur = []

    def rec():
        if len(cur) == a.n:
            out.append(tuple(cur))
            return
        for s in range(len(counts)):
            if counts[s]:
                counts[s] -= 1
                cur.append(s + 1)
                rec()
                cur.pop()
                counts[s] += 1

    rec()
    return out


def ga_neighbors(u) -> list:
    out = []
    for i in range(len(u) - 1):
        if u[i] != u[i + 1]:
            out.append(u[:i] + (u[i + 1], u[i]) + u[i + 2:])
    return out


def ga_ham(a, budget: int = SEARCH_BUDGET) -> list:
    """Hamilton path (two odd parts) or cycle (m >= 3) of the multiset-permutation graph."""
    a = _comp(a)
    n, m = a.n, a.m
    odd = sum(1 for p in a.parts if p % 2)
    if m == 2:
        if odd != 2:
            raise ValueError("two-part compositions need both parts odd")
    elif m >= 3:
        if odd < 2:
            raise ValueError("need at least two odd parts")
        if m == 3 and n % 2 == 0 and sorted(a.parts) == [1, 1, n - 2]:
            raise ValueError(f"G{a.parts} has no Hamilton cycle (exceptional case n-2,1,1 with n even)")
    else:
        raise ValueError("need at least two parts")
    words = multiset_perms(a)
    idx = {w: i for i, w in enumerate(words)}
    nb = [sorted(idx[v] for v in ga_neighbors(w)) for w in words]
    if m == 2:
        u = a.identity_word()
        v = tuple(2 for _ in range(a.parts[1])) + tuple(1 for _ in range(a.parts[0]))
        path = rotation_search(nb, idx[u], idx[v], budget=_Budget(budget, None))
    else:
        path = rotation_search(nb, 0, cycle=True, budget=_Budget(budget, None))
    if path is None:
        raise RuntimeError(f"no Hamilton {'path' if m == 2 else 'cycle'} found in G{a.parts}")
    return [words[i] for i in path]


# ---------------------------------------------------------------------------
# the automorphism f_a and its orbit representatives


def fa_automorphism(a) -> PermAutomorphism:
    """Rotate the values of each block cyclically: b+1 -> b+2 -> ... -> b+a -> b+1."""
    a = _comp(a)
    values = []
    for blk in a.blocks():
        values.extend(blk[1:] + blk[:1])
    return PermAutomorphism(tuple(range(a.n)), tuple(values))


def _shape(a: Composition) -> str:
    p = a.parts
    if p[0] >= 3 and all(x % 2 for x in p) and _pairwise_coprime(p):
        return "i"
    if a.m >= 2 and p[0] == 2 and p[1] >= 2 and p[1] & (p[1] - 1) == 0 and _pairwise_coprime(p[1:]):
        return "ii"
    raise ValueError(f"composition {p} is neither pairwise coprime odd with a_1 >= 3 "
                     "nor of the form (2, 2^c, pairwise coprime ...)")


def _pairwise_coprime(parts) -> bool:
    return all(math.gcd(x, y) == 1 for i, x in enumerate(parts) for y in parts[i + 1:])


def id_mix_path(a) -> list:
    """Path from the identity to a neighbour of f_a(identity), one vertex per
    f_a-orbit of the form ide(a) mix (X_1 x ... x X_m)."""
    a = _comp(a)
    shape = _shape(a)
    return _id_mix(a.parts, shape)


@lru_cache(maxsize=None)
def _id_mix_cached(parts: tuple, shape: str) -> tuple:
    return tuple(_id_mix_build(parts, shape))


def _id_mix(parts, shape):
    return list(_id_mix_cached(tuple(parts), shape))


def _id_mix_build(parts: tuple, shape: str) -> list:
    n = sum(parts)
    if shape == "i" and len(parts) == 1:
        P = lace_path(range(1, n), tuple(range(1, n)), tuple(range(2, n)) + (1,))
        return [p + (n,) for p in P]
    if shape == "ii" and len(parts) == 2:
        if n == 4:
            return [(1, 2, 3, 4), (2, 1, 3, 4)]
        X = tuple(range(3, n))
        P = lace_path(X, X, (4, 3) + tuple(range(5, n)))
        P2 = lace_path(X, (4, 3) + tuple(range(5, n)), tuple(range(4, n)) + (3,))
        return [(1, 2) + p + (n,) for p in P] + [(2, 1) + p + (n,) for p in P2]
    am = parts[-1]
    n1 = n - am
    Z = _id_mix(parts[:-1], shape)
    if am == 1:
        return [z + (n,) for z in Z]
    if len(Z) % 2:
        raise ValueError("the inner path must have an even number of vertices")
    X = tuple(range(n1 + 1, n))
    P = lace_path(X, X, (n1 + 2, n1 + 1) + tuple(range(n1 + 3, n)))
    Y = (n1 + 1,) + tuple(range(n1 + 3, n + 1))
    P2 = lace_path(Y, Y, tuple(range(n1 + 3, n + 1)) + (n1 + 1,))
    out = []
    for i, z in enumerate(Z[:-1]):
        seq = P if i % 2 == 0 else P[::-1]
        out.extend(z + p + (n,) for p in seq)
    out.extend(Z[-1] + (n1 + 2,) + p for p in P2)
    return out


def pin_cycle(a) -> HamCycle:
    """An lcm(a)-symmetric Hamilton cycle of the permutahedron for f_a."""
    a = _comp(a)
    n, m = a.n, a.m
    if n < 3:
        raise ValueError("need n >= 3")
    shape = _shape(a)
    if shape == "ii" and m < 4:
        raise ValueError("the (2, 2^c, ...) shape needs at least four parts")
    f = fa_automorphism(a)
    k = a.lcm
    Q = id_mix_path(a)
    ys = [a.split(x) for x in Q]
    if m == 1:
        P = Q
    else:
        if m == 2:
            R = ga_ham(a)
            R2 = None
            u = R[0]
        else:
            C = ga_ham(a)
            if shape == "ii" and a.parts[1] == 2:
                u = (1, 1) + tuple(i + 1 for i in range(2, m) for _ in range(a.parts[i])) + (2, 2)
            else:
                u = a.identity_word()
            j = C.index(u)
            C = C[j:] + C[:j]
            R = C
            R2 = [u] + C[:0:-1]
        if len(ys) % 2:
            raise ValueError("the representative path must have even length")
        P = []
        for i in range(0, len(ys), 2):
            Ri = R
            if not _adjacent(mix(R[-1], ys[i]), mix(R[-1], ys[i + 1])):
                if R2 is None or not _adjacent(mix(R2[-1], ys[i]), mix(R2[-1], ys[i + 1])):
                    raise RuntimeError("neither edge-deleted path joins consecutive blocks")
                Ri = R2
            P.extend(mix(w, ys[i]) for w in Ri)
            P.extend(mix(w, ys[i + 1]) for w in reversed(Ri))
    return lift_path(Permutahedron(n), f, P, k, "pin", {"a": list(a.parts)})


def _adjacent(x, y) -> bool:
    d = [i for i in range(len(x)) if x[i] != y[i]]
    return len(d) == 2 and d[1] == d[0] + 1 and x[d[0]] == y[d[1]] and x[d[1]] == y[d[0]]


def best_composition(n: int) -> Composition:
    """Witness partition for max(lambda0(n), lambda2(n)) in a shape pin_cycle accepts."""
    if n < 3:
        raise ValueError("need n >= 3")
    l0 = landau0(n)
    l2 = landau2(n)
    if l2.defined and l2.value > l0.value:
        parts = list(l2.witness.parts)
        evens = sorted((p for p in parts if p % 2 == 0), reverse=True)
        odds = sorted((p for p in parts if p % 2 and p > 1), reverse=True)
        ones = [p for p in parts if p == 1]
        two_c = evens[0] if evens[0] != 2 or len(evens) < 2 else 2
        rest = list(evens)
        rest.remove(two_c)
        comp = Composition(tuple([rest[0], two_c] + odds + ones))
        if comp.m >= 4:
            return comp
    return Composition(tuple(l0.witness.parts))


def best_perm_cycle(n: int) -> HamCycle:
    """A Hamilton cycle of the permutahedron with compression max(lambda0, lambda2)."""
    c = pin_cycle(best_composition(n))
    c.construction = "best"
    c.params = {"n": n, "a": c.params["a"]}
    return c


def plus_one_track(n: int) -> HamCycle:
    """An n-symmetric balanced 1-track cycle of the plus-permutahedron, n odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    Q = lace_path(range(1, n), tuple(range(1, n)), tuple(range(2, n)) + (1,))
    P = [q + (n,) for q in Q]
    f = PermAutomorphism.rotation(n)
    return lift_path(PermutahedronPlus(n), f, P, n, "plus one track", {"n": n})
