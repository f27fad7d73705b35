"""Symmetric Hamilton cycles in Johnson graphs and middle-levels graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .cube import brgc_words
from .graphs import BitAutomorphism, Johnson, MiddleLevels
from .verify import HamCycle, _Budget, lift_path, lifted_cycle_search, rotation_search

NECKLACE_BUDGET = 10**8


@dataclass
class NecklacePath:
    n: int
    k: int
    path: list

    @property
    def start(self):
        return self.path[0]

    @property
    def end(self):
        return self.path[-1]


def _to_int(word) -> int:
    x = 0
    for b in word:
        x = (x << 1) | int(b)
    return x


def _to_word(x: int, n: int) -> tuple:
    return tuple((x >> (n - 1 - i)) & 1 for i in range(n))


def _rot(x: int, n: int, mask: int) -> int:
    """x_1 x_2 ... x_n -> x_2 ... x_n x_1 with x_1 as the most significant bit."""
    return ((x << 1) | (x >> (n - 1))) & mask


def _neighbors_int(x: int, n: int) -> list:
    ones = [i for i in range(n) if (x >> i) & 1]
    zeros = [i for i in range(n) if not (x >> i) & 1]
    return [x ^ (1 << i) ^ (1 << j) for i in ones for j in zeros]


def necklace_canonical(word) -> tuple:
    """Lexicographically smallest rotation of a word."""
    w = tuple(word)
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def _single_necklace(n, k):
    return k in (1, n - 1)


def _necklace_table(n: int, k: int, first: int):
    """Map every vertex v to (necklace id, t) with v = rot^t(rep[id]); rep[0] = first."""
    mask = (1 << n) - 1
    where: dict = {}
    reps = []

    def add(r):
        i = len(reps)
        reps.append(r)
        v = r
        for t in range(n):
            if v in where:
                raise ValueError(f"necklaces of J({n},{k}) are not all of full size")
            where[v] = (i, t)
            v = _rot(v, n, mask)

    add(first)
    # enumerate positions of the rarer symbol
    flip = 2 * k > n
    for c in combinations(range(n), n - k if flip else k):
        v = 0
        for i in c:
            v |= 1 << (n - 1 - i)
        if flip:
            v ^= mask
        if v not in where:
            add(v)
    return reps, where


@lru_cache(maxsize=None)
def _necklace_path_cached(n: int, k: int, budget: int) -> tuple:
    x = (1,) * k + (0,) * (n - k)
    if _single_necklace(n, k):
        return (x,)
    y = (1,) * (k - 1) + (0, 1) + (0,) * (n - k - 1)
    mask = (1 << n) - 1
    reps, where = _necklace_table(n, k, _to_int(x))
    M = len(reps)
    # quotient graph with rotation voltages: rep[i] ~ rot^t(rep[j]) gives t in volt[i][j]
    volt = [dict() for _ in range(M)]
    for i, r in enumerate(reps):
        for w in _neighbors_int(r, n):
            j, t = where[w]
            if j != i:
                volt[i][j] = volt[i].get(j, 0) | (1 << t)
    nbrs = [sorted(v) for v in volt]
    end, t_end = where[_to_int(y)]
    full = (1 << n) - 1

    def shift(bits, t):
        return ((bits << t) | (bits >> (n - t))) & full if t else bits

    budget_left = _Budget(budget, None)
    for seed in range(64):
        qpath = rotation_search(nbrs, 0, end, budget=budget_left, seed=seed)
        # reach[l]: rotations achievable at step l
        reach = [1]
        for a, b in zip(qpath, qpath[1:]):
            opts, cur, nxt = volt[a][b], reach[-1], 0
            for t in range(n):
                if opts >> t & 1:
                    nxt |= shift(cur, t)
            reach.append(nxt)
        if not reach[-1] >> t_end & 1:
            continue
        rots = [t_end]
        for l in range(len(qpath) - 1, 0, -1):
            need, opts = rots[-1], volt[qpath[l - 1]][qpath[l]]
            for t in range(n):
                prev = (need - t) % n
                if opts >> t & 1 and reach[l - 1] >> prev & 1:
                    rots.append(prev)
                    break
        rots.reverse()
        out = []
        for i, t in zip(qpath, rots):
            v = reps[i]
            for _ in range(t):
                v = _rot(v, n, mask)
            out.append(_to_word(v, n))
        return tuple(out)
    raise RuntimeError(f"no necklace path found in J({n},{k})")


def necklace_path(n: int, k: int, budget: int = NECKLACE_BUDGET) -> NecklacePath:
    """A path from 1^k 0^{n-k} to 1^{k-1} 0 1 0^{n-k-1} meeting every necklace once."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    if math.gcd(n, k) != 1:
        raise ValueError(f"gcd({n},{k}) != 1: necklaces of J({n},{k}) have unequal sizes")
    return NecklacePath(n, k, list(_necklace_path_cached(n, k, budget)))


def coprime_cycle(n: int, k: int) -> HamCycle:
    """An n-symmetric, 1-track, balanced Hamilton cycle of J(n,k), gcd(n,k) = 1."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    if math.gcd(n, k) != 1:
        raise ValueError(f"gcd({n},{k}) must be 1")
    if n < 3:
        raise ValueError("J(n,k) needs at least 3 vertices for a cycle")
    f = BitAutomorphism.shift_left(n)
    P = necklace_path(n, k).path
    return lift_path(Johnson(n, k), f, P, n, "coprime", {"n": n, "k": k})


def q_of(n: int, k: int) -> int:
    """Largest q <= n with q > max(k, n-k) and gcd(q, l) = 1 for l = k-(n-q)..k."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    for q in range(n, max(k, n - k), -1):
        if all(math.gcd(q, ell) == 1 for ell in range(k - (n - q), k + 1)):
            return q
    raise ValueError(f"no admissible q for ({n},{k})")


def _block(q: int, ell: int) -> list:
    if ell in (1, q - 1):
        return [(1,) * ell + (0,) * (q - ell)]
    return necklace_path(q, ell).path


def general_cycle(n: int, k: int) -> HamCycle:
    """A q-symmetric Hamilton cycle of J(n,k) with at most 1+n-q tracks, q = q_of(n,k)."""
    q = q_of(n, k)
    if q == n:
        c = coprime_cycle(n, k)
        c.construction = "general"
        return c
    r = n - q
    xs = brgc_words(r)
    P = []
    for i, x in enumerate(xs):
        ell = k - sum(x)
        R = _block(q, ell)
        if i == len(xs) - 1:
            s = q - ell
            R = [tuple(reversed(w)) for w in R]
            R = [w[s:] + w[:s] for w in R]
        P.extend(w + x for w in R)
    f = BitAutomorphism.shift_left(n, q)
    return lift_path(Johnson(n, k), f, P, q, "general", {"n": n, "k": k, "q": q})


def m7_automorphism() -> BitAutomorphism:
    """x_1..x_7 -> complement of x_1 x_2 x_4 x_5 x_6 x_7 x_3 (order 10)."""
    return BitAutomorphism((0, 1, 3, 4, 5, 6, 2), (1,) * 7)


def middle_levels_cycle(n: int, automorphism: BitAutomorphism | None = None, budget: int = 10**7) -> HamCycle:
    """A symmetric Hamilton cycle of M_{2n+1} by lifted search (cyclic shift by default)."""
    if n < 1:
        raise ValueError("need n >= 1")
    g = MiddleLevels(n)
    f = automorphism or BitAutomorphism.shift_left(2 * n + 1)
    c = lifted_cycle_search(g, f, budget=budget)
    if c is None:
        raise RuntimeError(f"no symmetric cycle of M_{2 * n + 1} for this automorphism")
    c.construction = "middle levels search"
    c.params = {"n": n}
    return c
