"""Symmetric Hamilton cycles in hypercubes."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import BitAutomorphism, Hypercube, orbits
from .verify import HamCycle, lift_path


def brgc_words(n: int) -> list:
    """Gamma_n as a list of tuples (Gamma_0 is the empty word)."""
    out = [()]
    for _ in range(n):
        out = [(0,) + w for w in out] + [(1,) + w for w in reversed(out)]
    return out


def brgc(n: int) -> HamCycle:
    if n < 2:
        raise ValueError("Q_n has a Hamilton cycle only for n >= 2")
    g = Hypercube(n)
    i = np.arange(2**n, dtype=np.int64)
    gray = i ^ (i >> 1)
    words = ((gray[:, None] >> np.arange(n - 1, -1, -1)) & 1).astype(np.uint8)
    # Gamma_n is 4-symmetric under x1 x2 x3 ... -> x2 ~x1 ~x3 x4 ...
    perm = [1, 0] + list(range(2, n))
    flip = [0, 1, 1 if n > 2 else 0] + [0] * (n - 3) if n > 2 else [0, 1]
    f = BitAutomorphism(tuple(perm), tuple(flip))
    return HamCycle(g, words, "brgc", {"n": n}, f, 4)


def interleave(u, v) -> tuple:
    if len(u) != len(v):
        raise ValueError(f"cannot interleave words of lengths {len(u)} and {len(v)}")
    out = []
    for a, b in zip(u, v):
        out += [a, b]
    return tuple(out)


def g_power(x, i: int) -> tuple:
    """g^i(x) with g(x_1..x_n) = x_2..x_n ~x_1."""
    x = tuple(x)
    for _ in range(i % (2 * len(x)) if x else 0):
        x = x[1:] + (1 - x[0],)
    return x


def _power_of_two_exp(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


def representatives(n: int) -> list:
    """R_n in the order (k, u, v) used by the recursive definition."""
    _power_of_two_exp(n)
    if n < 2:
        raise ValueError("R_n is defined for n = 2^r with r >= 1")
    R = [(0, 0)]
    m = 2
    while m < n:
        cache = {}
        nxt = []
        for k in range(m):
            for u in R:
                if (u, k) not in cache:
                    cache[(u, k)] = g_power(u, k)
                gu = cache[(u, k)]
                for v in R:
                    nxt.append(interleave(gu, v))
        R, m = nxt, 2 * m
    return R


@dataclass
class RepPath:
    path: list
    automorphism: BitAutomorphism
    orbit_size: int


def _rep_path_list(n: int) -> list:
    if n == 4:
        return [(0, 0, 0, 0), (0, 0, 1, 0)]
    half = n // 2
    Pn = _rep_path_list(half)
    # P' = P, g^2(P), g^4(P), ... and P'' = g(P), g^3(P), ...
    P1 = []
    P2 = []
    for i in range(half):
        block = [g_power(x, i) for x in Pn]
        (P1 if i % 2 == 0 else P2).extend(block)
    first = [interleave(u, v) for u, v in zigzag(P1, Pn)]
    second = [interleave(u, v) for u, v in zigzag(P2, list(reversed(Pn)))]
    return first + second


def rep_path(n: int) -> RepPath:
    """P_n: a path from 0^n to 0^{n-2}10 through R_n."""
    r = _power_of_two_exp(n)
    if r < 2:
        raise ValueError("P_n is defined for n = 2^r with r >= 2")
    return RepPath(_rep_path_list(n), BitAutomorphism.cube_g(n), 2 * n)


def zigzag(P, Q) -> list:
    """(P, q_1), (rev P, q_2), (P, q_3), ... for |Q| even."""
    if len(Q) % 2:
        raise ValueError("the second path must have an even number of vertices")
    out = []
    for j, q in enumerate(Q):
        seq = P if j % 2 == 0 else list(reversed(P))
        out.extend((p, q) for p in seq)
    return out


def _is_path(words, adjacent) -> int | None:
    for i in range(len(words) - 1):
        if not adjacent(words[i], words[i + 1]):
            return i
    return None


def product_cycle(G: Hypercube, g: BitAutomorphism, P, H: Hypercube, h: BitAutomorphism, Q,
                  construction: str = "product") -> HamCycle:
    """C = P|_|Q, f(P|_|Q), ..., f^{k-1}(P|_|Q) for f = (g, h) on Q_{n+m}."""
    P = [tuple(x) for x in P]
    Q = [tuple(x) for x in Q]
    orb = orbits(g, G)
    k = orb.uniform_size
    if k is None or k < 2:
        raise ValueError("g must have all orbits of one size k >= 2")
    where = {}
    for i, o in enumerate(orb.orbits):
        for x in o:
            where[x] = i
    if len(P) != len(orb) or len({where[x] for x in P}) != len(P):
        raise ValueError("P must contain exactly one vertex from each orbit of g")
    bad = _is_path(P, G.adjacent)
    if bad is not None:
        raise ValueError(f"P is not a path: break after index {bad}")
    if not G.adjacent(P[0], g.apply(P[0])):
        raise ValueError("the first vertex u of P must be adjacent to g(u)")
    if H.vertex_count % 2:
        raise ValueError("H must have an even number of vertices")
    if k % h.order():
        raise ValueError(f"ord(h) = {h.order()} must divide k = {k}")
    if len(Q) != H.vertex_count or len(set(Q)) != len(Q):
        raise ValueError("Q must be a Hamilton path of H")
    bad = _is_path(Q, H.adjacent)
    if bad is not None:
        raise ValueError(f"Q is not a path: break after index {bad}")
    if Q[-1] != h.apply(Q[0]):
        raise ValueError("Q must end at h(v) where v is its first vertex")
    f = g.concat(h)
    X = [p + q for p, q in zigzag(P, Q)]
    return lift_path(Hypercube(G.n + H.n), f, X, k, construction)


def _flip_first(m: int) -> BitAutomorphism:
    return BitAutomorphism(tuple(range(m)), (1,) + (0,) * (m - 1))


def optimal_cube_cycle(n: int) -> HamCycle:
    """A Hamilton cycle of Q_n with compression 2^ceil(log2 n) (4 for n = 2)."""
    if n < 2:
        raise ValueError("Q_n has a Hamilton cycle only for n >= 2")
    if n <= 4:
        c = brgc(n)
        c.construction = "optimal"
        return c
    r = math.ceil(math.log2(n)) - 1
    n1 = 2**r
    m = n - n1
    rp = rep_path(n1)
    c = product_cycle(Hypercube(n1), rp.automorphism, rp.path, Hypercube(m), _flip_first(m), brgc_words(m),
                      "optimal")
    c.params = {"n": n}
    return c


def group_shift(ms) -> BitAutomorphism:
    """Complement the first bit, then rotate each block of sizes ms left by one."""
    perm, flip, a = [], [], 0
    for j, m in enumerate(ms):
        perm.extend(list(range(a + 1, a + m)) + [a])
        flip.extend([0] * m)
        if j == 0:
            flip[a + m - 1] = 1
        a += m
    return BitAutomorphism(tuple(perm), tuple(flip))


def t_track_cycle(n: int, ms) -> HamCycle:
    """A 2n-symmetric cycle in Q_{n + sum(ms)} with at most 1 + len(ms) tracks."""
    ms = [int(m) for m in ms]
    r = _power_of_two_exp(n)
    if r < 2:
        raise ValueError("n must be a power of two >= 4")
    if not ms:
        raise ValueError("need at least one extra block (t >= 2)")
    for m in ms:
        _power_of_two_exp(m)
        if m > n:
            raise ValueError("block sizes must not exceed n")
    if any(a < b for a, b in zip(ms, ms[1:])):
        raise ValueError("block sizes must be non-increasing")
    M = sum(ms)
    h = group_shift(ms)
    if len(ms) == 1:
        Q = [tuple(reversed(w)) for w in brgc_words(M)]
    else:
        # BRGC ends at e_1; swapping coordinates 1 and m_1 makes it end at h(0)
        swap = list(range(M))
        swap[0], swap[ms[0] - 1] = swap[ms[0] - 1], swap[0]
        Q = [tuple(w[i] for i in swap) for w in brgc_words(M)]
    rp = rep_path(n)
    c = product_cycle(Hypercube(n), rp.automorphism, rp.path, Hypercube(M), h, Q, "t-track")
    c.params = {"n": n, "ms": ms}
    return c
